#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <algorithm>
#include <cmath>
#include <complex>
#include <vector>

#include "doctest.h"
#include "zstrip/ensemble.hpp"
#include "zstrip/poly.hpp"
#include "zstrip/roots.hpp"

using zstrip::Complex;
using zstrip::ComplexPolynomial;

namespace {

// Greedy multiset match: every expected root has a computed root within tol.
bool roots_match(const std::vector<Complex>& got, std::vector<Complex> want, double tol) {
    if (got.size() != want.size()) return false;
    for (const Complex& g : got) {
        auto best = want.end();
        double best_d = tol;
        for (auto it = want.begin(); it != want.end(); ++it) {
            const double d = std::abs(g - *it);
            if (d <= best_d) {
                best_d = d;
                best = it;
            }
        }
        if (best == want.end()) return false;
        want.erase(best);
    }
    return want.empty();
}

// 2D cross product sign for the convex-hull containment check.
double cross(const Complex& o, const Complex& a, const Complex& b) {
    return (a.real() - o.real()) * (b.imag() - o.imag()) -
           (a.imag() - o.imag()) * (b.real() - o.real());
}

// Monotone-chain convex hull of a point set.
std::vector<Complex> convex_hull(std::vector<Complex> pts) {
    std::sort(pts.begin(), pts.end(), [](const Complex& a, const Complex& b) {
        return a.real() != b.real() ? a.real() < b.real() : a.imag() < b.imag();
    });
    pts.erase(std::unique(pts.begin(), pts.end(),
                          [](const Complex& a, const Complex& b) {
                              return a.real() == b.real() && a.imag() == b.imag();
                          }),
              pts.end());
    if (pts.size() <= 2) return pts;
    std::vector<Complex> hull(2 * pts.size());
    std::size_t k = 0;
    for (std::size_t i = 0; i < pts.size(); ++i) {
        while (k >= 2 && cross(hull[k - 2], hull[k - 1], pts[i]) <= 0.0) --k;
        hull[k++] = pts[i];
    }
    const std::size_t lower = k + 1;
    for (std::size_t i = pts.size() - 1; i-- > 0;) {
        while (k >= lower && cross(hull[k - 2], hull[k - 1], pts[i]) <= 0.0) --k;
        hull[k++] = pts[i];
    }
    hull.resize(k - 1);
    return hull;
}

// Signed distance of z from hull (negative inside), as max over edge
// half-planes; degenerate hulls fall back to segment/point distance.
double hull_excess(const std::vector<Complex>& hull, const Complex& z) {
    if (hull.empty()) return 0.0;
    if (hull.size() == 1) return std::abs(z - hull[0]);
    if (hull.size() == 2) {
        const Complex d = hull[1] - hull[0];
        const double len2 = std::norm(d);
        double t = ((z - hull[0]) * std::conj(d)).real() / len2;
        t = std::clamp(t, 0.0, 1.0);
        return std::abs(z - (hull[0] + t * d));
    }
    double worst = -1e300;
    for (std::size_t i = 0; i < hull.size(); ++i) {
        const Complex a = hull[i];
        const Complex b = hull[(i + 1) % hull.size()];
        const double len = std::abs(b - a);
        // cross > 0 means z is on the inner (left) side of edge a->b.
        worst = std::max(worst, -cross(a, b, z) / len);
    }
    return worst;
}

}  // namespace

TEST_CASE("closed-form degrees") {
    SUBCASE("linear") {
        const auto rs = zstrip::find_roots(ComplexPolynomial({Complex(-6.0), Complex(3.0)}));
        REQUIRE(rs.roots.size() == 1);
        CHECK(std::abs(rs.roots[0] - Complex(2.0)) <= 1e-15);
        CHECK(rs.pairing.empty());
    }
    SUBCASE("z^2 + 1") {
        const auto rs = zstrip::find_roots(
            ComplexPolynomial({Complex(1.0), Complex(0.0), Complex(1.0)}));
        REQUIRE(rs.roots.size() == 2);
        CHECK(std::abs(rs.roots[0] - Complex(0.0, -1.0)) <= 1e-15);
        CHECK(std::abs(rs.roots[1] - Complex(0.0, 1.0)) <= 1e-15);
        REQUIRE(rs.pairing.size() == 1);
        CHECK(rs.pairing[0] == std::pair<int, int>(0, 1));
        for (double r : rs.residuals) CHECK(r <= 1e-15);
    }
    SUBCASE("exact double root") {
        // (z - 1)^2
        const auto rs = zstrip::find_roots(
            ComplexPolynomial({Complex(1.0), Complex(-2.0), Complex(1.0)}));
        REQUIRE(rs.roots.size() == 2);
        CHECK(std::abs(rs.roots[0] - Complex(1.0)) <= 1e-7);
        CHECK(std::abs(rs.roots[1] - Complex(1.0)) <= 1e-7);
    }
}

TEST_CASE("double root inside a cubic collapses to one cluster") {
    // (z - 1)^2 (z + 2) = z^3 - 3z + 2
    const auto rs = zstrip::find_roots(
        ComplexPolynomial({Complex(2.0), Complex(-3.0), Complex(0.0), Complex(1.0)}));
    REQUIRE(rs.roots.size() == 3);
    CHECK(std::abs(rs.roots[0] - Complex(-2.0)) <= 1e-9);
    // The two copies of the clustered root are bit-identical.
    CHECK(rs.roots[1] == rs.roots[2]);
    CHECK(std::abs(rs.roots[1] - Complex(1.0)) <= 1e-6);
}

TEST_CASE("well-separated degree 20") {
    std::vector<Complex> roots;
    for (int k = 0; k < 10; ++k) {
        roots.emplace_back(-4.5 + k, 0.0);
        if (k < 5) {
            roots.emplace_back(-2.0 + k, 1.5);
            roots.emplace_back(-2.0 + k, -1.5);
        }
    }
    const auto p = ComplexPolynomial::from_roots(roots, Complex(2.0));
    const auto rs = zstrip::find_roots(p);
    CHECK(roots_match(rs.roots, roots, 1e-7));
    // Real-coefficient input: five conjugate pairs reported.
    CHECK(rs.pairing.size() == 5);
}

TEST_CASE("random recovery with enforced separation") {
    zstrip::SplitRng rng(424242);
    int cases = 0;
    for (int trial = 0; cases < 50; ++trial) {
        REQUIRE(trial < 500);
        const int n = 3 + static_cast<int>(rng.uniform(trial, 0) * 22);
        std::vector<Complex> roots;
        bool ok = true;
        for (int k = 0; k < n && ok; ++k) {
            const Complex cand(rng.uniform(trial, 2 * k + 1) * 8.0 - 4.0,
                               rng.uniform(trial, 2 * k + 2) * 4.0 - 2.0);
            for (const Complex& r : roots)
                if (std::abs(cand - r) < 0.3) ok = false;
            roots.push_back(cand);
        }
        if (!ok) continue;
        ++cases;
        const auto rs = zstrip::find_roots(ComplexPolynomial::from_roots(roots));
        CHECK(roots_match(rs.roots, roots, 1e-6));
        for (double res : rs.residuals) CHECK(res <= 1e-9);
    }
}

TEST_CASE("strip width classification") {
    SUBCASE("mixed real and conjugate roots") {
        zstrip::RootSet rs;
        rs.roots = {Complex(1.0), Complex(2.0, 0.5), Complex(2.0, -0.5)};
        const auto report = zstrip::strip_width(rs);
        CHECK(report.half_width == doctest::Approx(0.5));
        CHECK(report.n_real == 1);
        CHECK(report.n_complex == 1);  // one conjugate pair
    }
    SUBCASE("tolerance decides realness") {
        zstrip::RootSet rs;
        rs.roots = {Complex(0.0, 1e-10)};
        const auto strict = zstrip::strip_width(rs);  // default tol 1e-12
        CHECK(strict.n_complex == 1);  // an unpaired non-real root still counts

        CHECK(strict.half_width == doctest::Approx(1e-10));
        const auto loose = zstrip::strip_width(rs, 1e-9);
        CHECK(loose.n_real == 1);
        CHECK(loose.half_width == 0.0);
        CHECK(loose.tolerance_used == doctest::Approx(1e-9));
    }
    SUBCASE("empty set") {
        const auto report = zstrip::strip_width(zstrip::RootSet{});
        CHECK(report.half_width == 0.0);
        CHECK(report.n_real == 0);
    }
}

TEST_CASE("conjugate symmetrization") {
    SUBCASE("near-real root snaps onto the axis") {
        zstrip::RootSet rs;
        rs.roots = {Complex(1.0, 1e-13)};
        const auto out = zstrip::symmetrize_conjugates(rs);
        CHECK(out.roots[0].imag() == 0.0);
        CHECK(out.roots[0].real() == doctest::Approx(1.0));
    }
    SUBCASE("near-conjugate pair becomes exactly conjugate") {
        zstrip::RootSet rs;
        rs.roots = {Complex(2.0, 1.0000001), Complex(2.0, -0.9999999)};
        const auto out = zstrip::symmetrize_conjugates(rs);
        REQUIRE(out.roots.size() == 2);
        Complex up = out.roots[0].imag() > 0 ? out.roots[0] : out.roots[1];
        Complex dn = out.roots[0].imag() > 0 ? out.roots[1] : out.roots[0];
        CHECK(up == std::conj(dn));
        CHECK(up.imag() == doctest::Approx(1.0).epsilon(1e-6));
    }
    SUBCASE("unbalanced set fails") {
        zstrip::RootSet rs;
        rs.roots = {Complex(0.0, 1.0)};
        CHECK_THROWS_AS(zstrip::symmetrize_conjugates(rs), zstrip::PairingFailure);
    }
    SUBCASE("no partner within tolerance fails") {
        zstrip::RootSet rs;
        rs.roots = {Complex(0.0, 1.0), Complex(0.5, -1.0)};
        CHECK_THROWS_AS(zstrip::symmetrize_conjugates(rs), zstrip::PairingFailure);
        CHECK_NOTHROW(zstrip::symmetrize_conjugates(rs, 1.0));
    }
}

TEST_CASE("coefficient reconstruction (Vieta)") {
    zstrip::SplitRng rng(99);
    for (int trial = 0; trial < 20; ++trial) {
        const int n = 4 + static_cast<int>(rng.uniform(trial, 0) * 9);
        std::vector<Complex> roots;
        for (int k = 0; k < n; ++k)
            roots.emplace_back(rng.uniform(trial, 3 * k + 1) * 6.0 - 3.0,
                               rng.uniform(trial, 3 * k + 2) * 2.0 - 1.0);
        const auto p = ComplexPolynomial::from_roots(roots, Complex(1.5, -0.5));
        const auto rs = zstrip::find_roots(p);
        const auto q = ComplexPolynomial::from_roots(rs.roots, p.leading());
        const double scale = std::max(1.0, p.max_coeff_magnitude());
        for (int k = 0; k <= p.degree(); ++k)
            CHECK(std::abs(p.coeff(static_cast<std::size_t>(k)) -
                           q.coeff(static_cast<std::size_t>(k))) <= 1e-8 * scale);
    }
}

TEST_CASE("critical points stay inside the root hull") {
    zstrip::SplitRng rng(1234);
    for (int trial = 0; trial < 20; ++trial) {
        const int n = 5 + static_cast<int>(rng.uniform(trial, 0) * 12);
        std::vector<Complex> roots;
        for (int k = 0; k < n; ++k)
            roots.emplace_back(rng.uniform(trial, 3 * k + 1) * 8.0 - 4.0,
                               rng.uniform(trial, 3 * k + 2) * 4.0 - 2.0);
        const auto hull = convex_hull(roots);
        const auto p = ComplexPolynomial::from_roots(roots);
        const auto rs = zstrip::find_roots(p.derivative());
        for (const Complex& c : rs.roots) CHECK(hull_excess(hull, c) <= 1e-7);
    }
}

TEST_CASE("iteration cap reports failure with diagnostics") {
    std::vector<Complex> roots;
    for (int k = 0; k < 12; ++k)
        roots.emplace_back(std::cos(0.7 * k) * (1.0 + 0.3 * k),
                           std::sin(1.1 * k) * (0.5 + 0.2 * k));
    const auto p = ComplexPolynomial::from_roots(roots);
    zstrip::RootFindOptions opts;
    opts.max_iterations = 1;
    bool threw = false;
    try {
        zstrip::find_roots(p, opts);
    } catch (const zstrip::RootFindFailure& e) {
        threw = true;
        CHECK(e.best().roots.size() == 12);
        CHECK(std::string(e.what()).find("residual") != std::string::npos);
    }
    CHECK(threw);
}

TEST_CASE("origin zeros are stripped exactly") {
    // z^3: all three roots exactly zero, residuals zero.
    const auto rs = zstrip::find_roots(ComplexPolynomial(
        {Complex(0.0), Complex(0.0), Complex(0.0), Complex(1.0)}));
    REQUIRE(rs.roots.size() == 3);
    for (const Complex& r : rs.roots) CHECK(r == Complex(0.0));
    for (double res : rs.residuals) CHECK(res == 0.0);
    // z^2 (z - 3): origin pair plus a simple root.
    const auto rs2 = zstrip::find_roots(ComplexPolynomial(
        {Complex(0.0), Complex(0.0), Complex(-3.0), Complex(1.0)}));
    CHECK(roots_match(rs2.roots, {Complex(0.0), Complex(0.0), Complex(3.0)}, 1e-12));
}

TEST_CASE("extreme coefficient scales") {
    const std::vector<Complex> roots = {Complex(-2.0), Complex(0.5, 1.0), Complex(0.5, -1.0),
                                        Complex(3.0)};
    for (const double s : {1e-200, 1e+200}) {
        const auto p = ComplexPolynomial::from_roots(roots, Complex(s));
        const auto rs = zstrip::find_roots(p);
        CHECK(roots_match(rs.roots, roots, 1e-8));
    }
    // Roots spanning six orders of magnitude.
    const std::vector<Complex> wide = {Complex(1e-3), Complex(1.0), Complex(1e3)};
    const auto rs = zstrip::find_roots(ComplexPolynomial::from_roots(wide));
    REQUIRE(rs.roots.size() == 3);
    CHECK(std::abs(rs.roots[0] - Complex(1e-3)) <= 1e-9);
    CHECK(std::abs(rs.roots[1] - Complex(1.0)) <= 1e-9);
    CHECK(std::abs(rs.roots[2] - Complex(1e3)) <= 1e-6);
}

TEST_CASE("degenerate inputs are rejected") {
    CHECK_THROWS_AS(zstrip::find_roots(ComplexPolynomial()), std::invalid_argument);
    CHECK_THROWS_AS(zstrip::find_roots(ComplexPolynomial::constant(Complex(5.0))),
                    std::invalid_argument);
}
