#include <cmath>
#include <stdexcept>

#include "zstrip/lp.hpp"

namespace zstrip {

namespace {

void require_real(const ComplexPolynomial& f, const char* op) {
    if (!f.is_real(1e-12))
        throw std::invalid_argument(std::string(op) +
                                    ": input must have real coefficients");
}

}  // namespace

ComplexPolynomial apply_window(const TaylorWindow& window, const ComplexPolynomial& f) {
    if (f.is_zero()) return f;
    if (window.order() < f.degree())
        throw std::invalid_argument("taylor window shorter than input degree");
    ComplexPolynomial acc = f * Complex(window.coeffs[0]);
    ComplexPolynomial d = f;
    for (int k = 1; k <= f.degree(); ++k) {
        d = d.derivative();
        if (window.coeffs[static_cast<std::size_t>(k)] != 0.0)
            acc += d * Complex(window.coeffs[static_cast<std::size_t>(k)]);
    }
    return acc;
}

ComplexPolynomial apply_series(const LPDescriptor& phi, const ComplexPolynomial& f) {
    if (f.is_zero()) return f;
    return apply_window(phi.taylor_window(f.degree()), f);
}

ComplexPolynomial apply_shift(Complex beta, const ComplexPolynomial& f) {
    // Synthetic-division Taylor shift: leaves the coefficients of f(z+beta).
    // Accumulating in extended precision keeps the result within one rounding
    // of the exact shifted coefficients instead of degree-many.
    std::vector<std::complex<long double>> c(f.coeffs().begin(), f.coeffs().end());
    const std::complex<long double> b(beta.real(), beta.imag());
    const int n = static_cast<int>(c.size()) - 1;
    for (int k = 0; k < n; ++k)
        for (int j = n - 1; j >= k; --j)
            c[static_cast<std::size_t>(j)] += b * c[static_cast<std::size_t>(j) + 1];
    std::vector<Complex> out(c.size());
    for (std::size_t j = 0; j < c.size(); ++j)
        out[j] = Complex(static_cast<double>(c[j].real()),
                         static_cast<double>(c[j].imag()));
    return ComplexPolynomial(std::move(out));
}

ComplexPolynomial apply_cos(double a, double b, const ComplexPolynomial& f) {
    require_real(f, "apply_cos");
    // (1/2)(e^{ib} f(z+ia) + e^{-ib} f(z-ia)); for real f the two shifted
    // polynomials are exact conjugates, so the sum is the real part of
    // e^{ib} f(z+ia) coefficient by coefficient.
    const ComplexPolynomial shifted = apply_shift(Complex(0.0, a), f);
    const Complex phase = std::polar(1.0, b);
    std::vector<Complex> out(shifted.coeffs().size());
    for (std::size_t k = 0; k < out.size(); ++k)
        out[k] = Complex((phase * shifted.coeffs()[k]).real(), 0.0);
    return ComplexPolynomial(std::move(out));
}

ComplexPolynomial apply_sin(double a, double b, const ComplexPolynomial& f) {
    require_real(f, "apply_sin");
    // (1/2i)(e^{ib} f(z+ia) - e^{-ib} f(z-ia)) = Im(e^{ib} f(z+ia)) termwise.
    const ComplexPolynomial shifted = apply_shift(Complex(0.0, a), f);
    const Complex phase = std::polar(1.0, b);
    std::vector<Complex> out(shifted.coeffs().size());
    for (std::size_t k = 0; k < out.size(); ++k)
        out[k] = Complex((phase * shifted.coeffs()[k]).imag(), 0.0);
    return ComplexPolynomial(std::move(out));
}

ComplexPolynomial apply_gauss(double alpha, const ComplexPolynomial& f) {
    ComplexPolynomial acc = f;
    ComplexPolynomial d = f;
    double term = 1.0;
    for (int k = 1; 2 * k <= f.degree(); ++k) {
        d = d.derivative(2);
        term *= -(alpha * alpha / 2.0) / k;
        acc += d * Complex(term);
    }
    return acc;
}

ComplexPolynomial iterated_cos_approx(double alpha, int n, const ComplexPolynomial& f) {
    if (n < 1 || n > 64)
        throw std::invalid_argument("iterated_cos_approx: n must be in [1, 64]");
    ComplexPolynomial out = f;
    const double step = alpha / n;
    for (int k = 0; k < n * n; ++k) out = apply_cos(step, 0.0, out);
    return out;
}

ComplexPolynomial apply_multiplier(std::span<const double> gamma, const ComplexPolynomial& f) {
    if (static_cast<int>(gamma.size()) < f.degree() + 1)
        throw std::invalid_argument(
            "apply_multiplier: sequence shorter than coefficient list");
    std::vector<Complex> out(f.coeffs());
    for (std::size_t k = 0; k < out.size(); ++k) out[k] *= gamma[k];
    return ComplexPolynomial(std::move(out));
}

}  // namespace zstrip
