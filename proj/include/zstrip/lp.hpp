#pragma once

#include <cstdint>
#include <span>
#include <variant>
#include <vector>

#include "zstrip/poly.hpp"

namespace zstrip {

// Growth type of an entire function: a nonnegative value, "minimal" (zero
// type at its order), or not applicable (order-zero functions).
struct GrowthType {
    enum class Kind { Value, Minimal, NotApplicable };
    Kind kind = Kind::NotApplicable;
    double value = 0.0;

    static GrowthType of(double v) { return {Kind::Value, v}; }
    static GrowthType minimal() { return {Kind::Minimal, 0.0}; }
    static GrowthType not_applicable() { return {Kind::NotApplicable, 0.0}; }
};

class LPDescriptor;

// phi(z) = c * z^m * prod_k (1 - z/root_k), all roots real and nonzero.
struct PolynomialRealRoots {
    std::vector<double> roots;
    double c = 1.0;
    int m = 0;
};
// phi(z) = exp(delta * z)
struct ExpLinear {
    double delta = 0.0;
};
// phi(z) = exp(-gamma * z^2), gamma >= 0
struct ExpQuadratic {
    double gamma = 0.0;
};
// phi(z) = cos(a*z + b), a > 0
struct Cosine {
    double a = 1.0;
    double b = 0.0;
};
// phi(z) = sin(a*z + b), a > 0
struct Sine {
    double a = 1.0;
    double b = 0.0;
};
struct Product {
    std::vector<LPDescriptor> factors;
};

// Taylor coefficients a_0..a_K of a descriptor about the origin.
struct TaylorWindow {
    std::vector<double> coeffs;
    int order() const { return static_cast<int>(coeffs.size()) - 1; }
};

// A real entire function with only real zeros, described structurally by its
// factored form. Carries declared order/type/genus metadata.
class LPDescriptor {
public:
    using Family =
        std::variant<PolynomialRealRoots, ExpLinear, ExpQuadratic, Cosine, Sine, Product>;

    enum class Parity { Even, Odd, None };

    LPDescriptor();  // the constant 1
    explicit LPDescriptor(Family family);

    static LPDescriptor one();
    static LPDescriptor cos_z() { return LPDescriptor(Cosine{1.0, 0.0}); }
    static LPDescriptor sin_z() { return LPDescriptor(Sine{1.0, 0.0}); }
    static LPDescriptor cosine(double a, double b = 0.0) { return LPDescriptor(Cosine{a, b}); }
    static LPDescriptor sine(double a, double b = 0.0) { return LPDescriptor(Sine{a, b}); }
    // exp(-alpha^2 z^2 / 2)
    static LPDescriptor gauss(double alpha);
    static LPDescriptor shift(double delta) { return LPDescriptor(ExpLinear{delta}); }
    static LPDescriptor poly_roots(std::vector<double> roots, double c = 1.0, int m = 0);
    static LPDescriptor product(std::vector<LPDescriptor> factors);

    const Family& family() const { return family_; }
    double declared_order() const { return order_; }
    GrowthType declared_type() const { return type_; }
    int genus() const { return genus_; }
    // Override the computed defaults (bounds-checked: order in [0,2], genus 0/1).
    void set_declared(double order, GrowthType type, int genus);

    Parity parity() const;
    bool is_even() const { return parity() == Parity::Even; }

    // phi(z), evaluated from the factored form.
    Complex eval(Complex z) const;
    // log(phi(i*t)) for real t, computed in log-space; requires phi even with
    // phi(it) > 0, throws std::domain_error otherwise.
    double log_eval_imag_axis(double t) const;

    // Taylor coefficients a_0..a_K (K <= 512).
    TaylorWindow taylor_window(int K) const;

    // Descriptor for phi(a*z); turns the series action of phi(D) into that of
    // phi(aD).
    LPDescriptor scaled(double a) const;

private:
    void compute_metadata();

    Family family_;
    double order_ = 0.0;
    GrowthType type_ = GrowthType::not_applicable();
    int genus_ = 0;
};

// Operator applications. All act on polynomials, where the series phi(D)f
// terminates exactly.

// phi(D)f = sum_k a_k f^(k), window truncated at deg f.
ComplexPolynomial apply_series(const LPDescriptor& phi, const ComplexPolynomial& f);
// Window applied directly (coeffs[k] multiplies f^(k)); window must extend to
// deg f.
ComplexPolynomial apply_window(const TaylorWindow& window, const ComplexPolynomial& f);
// exp(beta D): f(z + beta), by in-place Taylor shift.
ComplexPolynomial apply_shift(Complex beta, const ComplexPolynomial& f);
// cos(aD + b) on real-coefficient f: (1/2)(e^{ib} f(z+ia) + e^{-ib} f(z-ia)).
ComplexPolynomial apply_cos(double a, double b, const ComplexPolynomial& f);
// sin(aD + b) on real-coefficient f.
ComplexPolynomial apply_sin(double a, double b, const ComplexPolynomial& f);
// exp(-alpha^2 D^2 / 2): sum_k (-alpha^2/2)^k f^(2k) / k!.
ComplexPolynomial apply_gauss(double alpha, const ComplexPolynomial& f);
// (cos((alpha/n) D))^(n^2) f, the finite stand-in for the Gaussian limit.
ComplexPolynomial iterated_cos_approx(double alpha, int n, const ComplexPolynomial& f);
// Coefficient-wise multiplier sequence: c_k -> gamma_k * c_k. Requires
// gamma.size() >= deg f + 1.
ComplexPolynomial apply_multiplier(std::span<const double> gamma, const ComplexPolynomial& f);

}  // namespace zstrip
