#pragma once

#include <complex>
#include <span>
#include <vector>

namespace zstrip {

using Complex = std::complex<double>;

// Hard cap on polynomial degree for every operation in the library.
inline constexpr int kMaxDegree = 512;
// Coefficients at or below this magnitude are treated as structural zeros
// when normalizing.
inline constexpr double kTrimThreshold = 1e-300;

// Dense univariate polynomial over C. Coefficients are stored in ascending
// degree order. Normalized form: either the coefficient list is empty (the
// zero polynomial) or the leading coefficient is nonzero.
class ComplexPolynomial {
public:
    ComplexPolynomial() = default;
    explicit ComplexPolynomial(std::vector<Complex> coeffs);

    static ComplexPolynomial constant(Complex value);
    // Monic-product construction (times `leading`) via a balanced factor tree.
    static ComplexPolynomial from_roots(std::span<const Complex> roots,
                                        Complex leading = Complex(1.0));

    bool is_zero() const { return coeffs_.empty(); }
    // Degree of the zero polynomial is reported as -1.
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    const std::vector<Complex>& coeffs() const { return coeffs_; }
    Complex coeff(std::size_t k) const {
        return k < coeffs_.size() ? coeffs_[k] : Complex(0.0);
    }
    Complex leading() const {
        return coeffs_.empty() ? Complex(0.0) : coeffs_.back();
    }

    Complex evaluate(Complex z) const;
    ComplexPolynomial derivative(int order = 1) const;
    // p(s*z)
    ComplexPolynomial scale_input(Complex s) const;

    double max_coeff_magnitude() const;
    // True when every coefficient's imaginary part is at most
    // rel_tol * max_coeff_magnitude().
    bool is_real(double rel_tol = 1e-12) const;
    // Drops imaginary parts of all coefficients.
    ComplexPolynomial real_part() const;

    ComplexPolynomial& operator+=(const ComplexPolynomial& rhs);
    ComplexPolynomial& operator-=(const ComplexPolynomial& rhs);
    ComplexPolynomial& operator*=(Complex s);

    friend ComplexPolynomial operator+(ComplexPolynomial a, const ComplexPolynomial& b) {
        a += b;
        return a;
    }
    friend ComplexPolynomial operator-(ComplexPolynomial a, const ComplexPolynomial& b) {
        a -= b;
        return a;
    }
    friend ComplexPolynomial operator*(ComplexPolynomial a, Complex s) {
        a *= s;
        return a;
    }
    friend ComplexPolynomial operator*(Complex s, ComplexPolynomial a) {
        a *= s;
        return a;
    }
    friend ComplexPolynomial operator*(const ComplexPolynomial& a, const ComplexPolynomial& b);

private:
    void normalize();

    std::vector<Complex> coeffs_;
};

// Product of a list of polynomials, multiplied pairwise in a balanced tree to
// keep coefficient growth well conditioned.
ComplexPolynomial balanced_product(std::vector<ComplexPolynomial> factors);

}  // namespace zstrip
