#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cmath>
#include <complex>
#include <vector>

#include "doctest.h"
#include "zstrip/poly.hpp"
#include "zstrip/serialize.hpp"

using zstrip::Complex;
using zstrip::ComplexPolynomial;

namespace {

bool close(Complex a, Complex b, double tol) { return std::abs(a - b) <= tol; }

}  // namespace

TEST_CASE("zero and constant polynomials") {
    const ComplexPolynomial zero;
    CHECK(zero.is_zero());
    CHECK(zero.degree() == -1);
    CHECK(zero.coeffs().empty());
    CHECK(zero.evaluate(Complex(3.0, 1.0)) == Complex(0.0));

    const ComplexPolynomial five = ComplexPolynomial::constant(Complex(5.0));
    CHECK(five.degree() == 0);
    CHECK(five.evaluate(Complex(-2.0, 7.0)) == Complex(5.0));

    // A constant at the trim threshold collapses to the zero polynomial.
    CHECK(ComplexPolynomial::constant(Complex(0.0)).is_zero());
}

TEST_CASE("construction normalizes trailing zeros") {
    const ComplexPolynomial p({Complex(1.0), Complex(2.0), Complex(0.0), Complex(0.0)});
    CHECK(p.degree() == 1);
    CHECK(p.coeff(0) == Complex(1.0));
    CHECK(p.coeff(1) == Complex(2.0));
    CHECK(p.coeff(7) == Complex(0.0));
    CHECK(p.leading() == Complex(2.0));
}

TEST_CASE("evaluate uses the full coefficient list") {
    // p(z) = z^2 + 1 at 2i: (2i)^2 + 1 = -3.
    const ComplexPolynomial p({Complex(1.0), Complex(0.0), Complex(1.0)});
    CHECK(close(p.evaluate(Complex(0.0, 2.0)), Complex(-3.0), 1e-15));
    // p(z) = (1+i) + 2z at z = 1-i: (1+i) + 2(1-i) = 3 - i.
    const ComplexPolynomial q({Complex(1.0, 1.0), Complex(2.0)});
    CHECK(close(q.evaluate(Complex(1.0, -1.0)), Complex(3.0, -1.0), 1e-15));
}

TEST_CASE("from_roots reproduces its roots and leading coefficient") {
    const std::vector<Complex> roots = {Complex(1.0), Complex(-2.0), Complex(0.0, 3.0),
                                        Complex(0.0, -3.0)};
    const ComplexPolynomial p = ComplexPolynomial::from_roots(roots, Complex(2.0));
    CHECK(p.degree() == 4);
    CHECK(close(p.leading(), Complex(2.0), 1e-15));
    for (const Complex& root : roots) {
        const double scale = p.max_coeff_magnitude();
        CHECK(std::abs(p.evaluate(root)) <= 1e-12 * scale);
    }
    // (z-1)(z+2)(z^2+9) = z^4 + z^3 + 7z^2 + 9z - 18, then doubled.
    CHECK(close(p.coeff(0), Complex(-36.0), 1e-12));
    CHECK(close(p.coeff(1), Complex(18.0), 1e-12));
    CHECK(close(p.coeff(2), Complex(14.0), 1e-12));
    CHECK(close(p.coeff(3), Complex(2.0), 1e-12));

    const ComplexPolynomial empty = ComplexPolynomial::from_roots({}, Complex(3.0));
    CHECK(empty.degree() == 0);
    CHECK(empty.coeff(0) == Complex(3.0));
}

TEST_CASE("derivative") {
    // (z^3 - 2z + 4)' = 3z^2 - 2; second derivative 6z.
    const ComplexPolynomial p({Complex(4.0), Complex(-2.0), Complex(0.0), Complex(1.0)});
    const ComplexPolynomial d1 = p.derivative();
    CHECK(d1.degree() == 2);
    CHECK(d1.coeff(0) == Complex(-2.0));
    CHECK(d1.coeff(1) == Complex(0.0));
    CHECK(d1.coeff(2) == Complex(3.0));
    const ComplexPolynomial d2 = p.derivative(2);
    CHECK(d2.degree() == 1);
    CHECK(d2.coeff(1) == Complex(6.0));
    CHECK(p.derivative(4).is_zero());
    CHECK(ComplexPolynomial().derivative().is_zero());
}

TEST_CASE("scale_input") {
    // p(z) = z^2 + z + 1 at 2i z: -4z^2 + 2i z + 1.
    const ComplexPolynomial p({Complex(1.0), Complex(1.0), Complex(1.0)});
    const ComplexPolynomial q = p.scale_input(Complex(0.0, 2.0));
    CHECK(close(q.coeff(0), Complex(1.0), 1e-15));
    CHECK(close(q.coeff(1), Complex(0.0, 2.0), 1e-15));
    CHECK(close(q.coeff(2), Complex(-4.0), 1e-15));
}

TEST_CASE("arithmetic") {
    const ComplexPolynomial a({Complex(1.0), Complex(1.0)});   // 1 + z
    const ComplexPolynomial b({Complex(-1.0), Complex(1.0)});  // -1 + z
    const ComplexPolynomial prod = a * b;
    CHECK(prod.degree() == 2);
    CHECK(close(prod.coeff(0), Complex(-1.0), 1e-15));
    CHECK(close(prod.coeff(1), Complex(0.0), 1e-15));
    CHECK(close(prod.coeff(2), Complex(1.0), 1e-15));

    ComplexPolynomial s = a;
    s += b;  // 2z
    CHECK(s.degree() == 1);
    CHECK(s.coeff(0) == Complex(0.0));
    CHECK(s.coeff(1) == Complex(2.0));
    s -= a + b;
    CHECK(s.is_zero());

    const ComplexPolynomial scaled = a * Complex(0.0, 1.0);
    CHECK(scaled.coeff(0) == Complex(0.0, 1.0));

    // Cancellation in the sum trims the degree.
    const ComplexPolynomial c({Complex(1.0), Complex(0.0), Complex(1.0)});
    const ComplexPolynomial d({Complex(0.0), Complex(0.0), Complex(-1.0)});
    CHECK((c + d).degree() == 0);
}

TEST_CASE("degree cap enforced") {
    std::vector<Complex> big(302, Complex(0.0));
    big.back() = Complex(1.0);  // z^301
    const ComplexPolynomial z301(big);
    CHECK(z301.degree() == 301);
    CHECK_THROWS_AS(z301 * z301, std::invalid_argument);

    std::vector<Complex> many(513, Complex(1.0));
    CHECK_THROWS_AS(ComplexPolynomial::from_roots(many), std::invalid_argument);
}

TEST_CASE("is_real and real_part") {
    const ComplexPolynomial p({Complex(1.0, 1e-15), Complex(2.0)});
    CHECK(p.is_real(1e-12));
    CHECK_FALSE(p.is_real(1e-17));
    const ComplexPolynomial q = p.real_part();
    CHECK(q.coeff(0) == Complex(1.0));
    CHECK(q.coeff(1) == Complex(2.0));
    CHECK(ComplexPolynomial({Complex(0.0, 1.0)}).is_real(1e-12) == false);
}

TEST_CASE("balanced_product matches sequential multiplication") {
    std::vector<ComplexPolynomial> factors;
    ComplexPolynomial sequential = ComplexPolynomial::constant(Complex(1.0));
    for (int k = 1; k <= 5; ++k) {
        const ComplexPolynomial f({Complex(static_cast<double>(k)), Complex(1.0)});
        factors.push_back(f);
        sequential = sequential * f;
    }
    const ComplexPolynomial tree = zstrip::balanced_product(factors);
    CHECK(tree.degree() == 5);
    for (int k = 0; k <= 5; ++k)
        CHECK(close(tree.coeff(static_cast<std::size_t>(k)),
                    sequential.coeff(static_cast<std::size_t>(k)), 1e-12));
    CHECK(zstrip::balanced_product({}).degree() == 0);
    CHECK(zstrip::balanced_product({}).coeff(0) == Complex(1.0));
}

TEST_CASE("json round trip is bit exact") {
    const ComplexPolynomial p(
        {Complex(0.1, -0.25), Complex(3.0), Complex(-1.0 / 3.0, 1e-9)});
    const zstrip::Json j = zstrip::poly_to_json(p);
    const ComplexPolynomial q = zstrip::poly_from_json(j);
    REQUIRE(q.degree() == p.degree());
    for (std::size_t k = 0; k < p.coeffs().size(); ++k) {
        CHECK(q.coeffs()[k].real() == p.coeffs()[k].real());
        CHECK(q.coeffs()[k].imag() == p.coeffs()[k].imag());
    }
    CHECK(zstrip::poly_to_json(q).dump() == j.dump());
}

TEST_CASE("json reader accepts plain numbers and envelopes") {
    const auto j = zstrip::Json::parse(R"({"coeffs": [4, 0, 1]})");
    const ComplexPolynomial p = zstrip::poly_from_json(j);
    CHECK(p.degree() == 2);
    CHECK(p.coeff(0) == Complex(4.0));

    const auto wrapped = zstrip::Json::parse(
        R"({"version": "1.0.0", "command": "apply", "params": {}, "result": {"coeffs": [[1, 0], [2, 0]]}})");
    const ComplexPolynomial q = zstrip::poly_from_json(wrapped);
    CHECK(q.degree() == 1);
    CHECK(q.coeff(1) == Complex(2.0));

    CHECK_THROWS_AS(zstrip::poly_from_json(zstrip::Json::parse("{}")),
                    std::invalid_argument);
    CHECK_THROWS_AS(zstrip::poly_from_json(zstrip::Json::parse(R"({"coeffs": [[1]]})")),
                    std::invalid_argument);
}

TEST_CASE("zero polynomial serializes to an empty coefficient list") {
    const zstrip::Json j = zstrip::poly_to_json(ComplexPolynomial());
    CHECK(j.at("coeffs").empty());
    CHECK(zstrip::poly_from_json(j).is_zero());
}
