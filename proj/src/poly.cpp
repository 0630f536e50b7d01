#include "zstrip/poly.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace zstrip {

namespace {

void check_degree(std::size_t n_coeffs) {
    if (n_coeffs > static_cast<std::size_t>(kMaxDegree) + 1)
        throw std::invalid_argument("polynomial degree exceeds cap of 512");
}

}  // namespace

ComplexPolynomial::ComplexPolynomial(std::vector<Complex> coeffs)
    : coeffs_(std::move(coeffs)) {
    check_degree(coeffs_.size());
    normalize();
}

void ComplexPolynomial::normalize() {
    while (!coeffs_.empty() && std::abs(coeffs_.back()) <= kTrimThreshold)
        coeffs_.pop_back();
}

ComplexPolynomial ComplexPolynomial::constant(Complex value) {
    return ComplexPolynomial(std::vector<Complex>{value});
}

ComplexPolynomial ComplexPolynomial::from_roots(std::span<const Complex> roots,
                                                Complex leading) {
    check_degree(roots.size() + 1);
    std::vector<ComplexPolynomial> factors;
    factors.reserve(roots.size());
    for (Complex r : roots)
        factors.push_back(ComplexPolynomial({-r, Complex(1.0)}));
    ComplexPolynomial p = balanced_product(std::move(factors));
    p *= leading;
    return p;
}

Complex ComplexPolynomial::evaluate(Complex z) const {
    if (coeffs_.empty()) return Complex(0.0);
    Complex acc = coeffs_.back();
    for (auto it = coeffs_.rbegin() + 1; it != coeffs_.rend(); ++it)
        acc = acc * z + *it;
    return acc;
}

ComplexPolynomial ComplexPolynomial::derivative(int order) const {
    if (order < 0) throw std::invalid_argument("derivative order must be >= 0");
    ComplexPolynomial out = *this;
    for (int k = 0; k < order && !out.coeffs_.empty(); ++k) {
        std::vector<Complex> d;
        d.reserve(out.coeffs_.size() > 0 ? out.coeffs_.size() - 1 : 0);
        for (std::size_t j = 1; j < out.coeffs_.size(); ++j)
            d.push_back(out.coeffs_[j] * static_cast<double>(j));
        out.coeffs_ = std::move(d);
        out.normalize();
    }
    return out;
}

ComplexPolynomial ComplexPolynomial::scale_input(Complex s) const {
    ComplexPolynomial out = *this;
    Complex power(1.0);
    for (std::size_t k = 1; k < out.coeffs_.size(); ++k) {
        power *= s;
        out.coeffs_[k] *= power;
    }
    out.normalize();
    return out;
}

double ComplexPolynomial::max_coeff_magnitude() const {
    double m = 0.0;
    for (Complex c : coeffs_) m = std::max(m, std::abs(c));
    return m;
}

bool ComplexPolynomial::is_real(double rel_tol) const {
    const double bound = rel_tol * max_coeff_magnitude();
    for (Complex c : coeffs_)
        if (std::abs(c.imag()) > bound) return false;
    return true;
}

ComplexPolynomial ComplexPolynomial::real_part() const {
    std::vector<Complex> out(coeffs_.size());
    for (std::size_t k = 0; k < coeffs_.size(); ++k)
        out[k] = Complex(coeffs_[k].real(), 0.0);
    return ComplexPolynomial(std::move(out));
}

ComplexPolynomial& ComplexPolynomial::operator+=(const ComplexPolynomial& rhs) {
    if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
    for (std::size_t k = 0; k < rhs.coeffs_.size(); ++k)
        coeffs_[k] += rhs.coeffs_[k];
    normalize();
    return *this;
}

ComplexPolynomial& ComplexPolynomial::operator-=(const ComplexPolynomial& rhs) {
    if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
    for (std::size_t k = 0; k < rhs.coeffs_.size(); ++k)
        coeffs_[k] -= rhs.coeffs_[k];
    normalize();
    return *this;
}

ComplexPolynomial& ComplexPolynomial::operator*=(Complex s) {
    for (Complex& c : coeffs_) c *= s;
    normalize();
    return *this;
}

ComplexPolynomial operator*(const ComplexPolynomial& a, const ComplexPolynomial& b) {
    if (a.is_zero() || b.is_zero()) return ComplexPolynomial();
    check_degree(a.coeffs_.size() + b.coeffs_.size() - 1);
    std::vector<Complex> out(a.coeffs_.size() + b.coeffs_.size() - 1, Complex(0.0));
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
        for (std::size_t j = 0; j < b.coeffs_.size(); ++j)
            out[i + j] += a.coeffs_[i] * b.coeffs_[j];
    return ComplexPolynomial(std::move(out));
}

ComplexPolynomial balanced_product(std::vector<ComplexPolynomial> factors) {
    if (factors.empty()) return ComplexPolynomial::constant(Complex(1.0));
    while (factors.size() > 1) {
        std::vector<ComplexPolynomial> next;
        next.reserve((factors.size() + 1) / 2);
        for (std::size_t i = 0; i + 1 < factors.size(); i += 2)
            next.push_back(factors[i] * factors[i + 1]);
        if (factors.size() % 2 == 1) next.push_back(factors.back());
        factors = std::move(next);
    }
    return factors.front();
}

}  // namespace zstrip
