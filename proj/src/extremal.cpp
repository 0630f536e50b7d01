#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "zstrip/extremal.hpp"

namespace zstrip {

namespace {

constexpr double kLn2 = std::numbers::ln2;
constexpr double kPi = std::numbers::pi;

void check_family(const ExtremalFamily& fam) {
    if (!(fam.a > 0.0) || !(fam.r > 0.0))
        throw std::invalid_argument("extremal family requires a > 0 and r > 0");
    if (fam.m < 1) throw std::invalid_argument("extremal family requires m >= 1");
}

void check_unit_at_zero(const LPDescriptor& phi, const char* who) {
    const Complex v = phi.eval(Complex(0.0, 0.0));
    if (std::abs(v - Complex(1.0, 0.0)) > 1e-9)
        throw std::invalid_argument(std::string(who) + ": operator symbol must be 1 at 0");
}

}  // namespace

double logcosh(double x) {
    const double ax = std::abs(x);
    return ax - kLn2 + std::log1p(std::exp(-2.0 * ax));
}

double acosh_of_exp(double L) {
    if (L <= 0.0) return 0.0;
    if (L < 7.0) return std::acosh(std::exp(L));
    const double u = std::exp(-2.0 * L);
    return L + kLn2 + std::log1p(-u / (2.0 * (1.0 + std::sqrt(1.0 - u))));
}

double logsumexp2(double a, double b) {
    const double hi = std::max(a, b);
    const double lo = std::min(a, b);
    if (std::isinf(hi) && hi < 0.0) return hi;
    return hi + std::log1p(std::exp(lo - hi));
}

ComplexPolynomial truncate_family(const ExtremalFamily& fam, int N) {
    check_family(fam);
    if (N < 1 || N > 40)
        throw std::invalid_argument("truncate_family: factor count cap exceeded");
    const int copies = fam.kind == FamilyKind::GA ? 2 : 1;
    std::vector<ComplexPolynomial> factors;
    factors.reserve(static_cast<std::size_t>(2 * N * copies));
    const double r2 = fam.r * fam.r;
    for (int j = 1; j <= N; ++j) {
        const double x = (kPi / 2.0 + (j - 1) * kPi) / fam.a;
        const ComplexPolynomial plus({Complex(x * x + r2), Complex(-2.0 * x), Complex(1.0)});
        const ComplexPolynomial minus({Complex(x * x + r2), Complex(2.0 * x), Complex(1.0)});
        for (int c = 0; c < copies; ++c) {
            factors.push_back(plus);
            factors.push_back(minus);
        }
    }
    return balanced_product(factors);
}

R1Result apply_even_phi_fa(const LPDescriptor& phi, const ExtremalFamily& fam) {
    check_family(fam);
    if (fam.kind != FamilyKind::FA)
        throw std::invalid_argument("apply_even_phi_fa: family kind must be FA");
    if (!phi.is_even())
        throw std::invalid_argument("apply_even_phi_fa: operator symbol must be even");
    check_unit_at_zero(phi, "apply_even_phi_fa");

    const double a = fam.a;
    const double r = fam.r;
    const double lphi = phi.log_eval_imag_axis(2.0 * a);

    R1Result out;
    out.ratio_log = logcosh(2.0 * a * r) - lphi;
    if (out.ratio_log <= 0.0) {
        out.root_case = RootCase::RealRoots;
        out.r1 = 0.0;
        const double ratio = std::min(1.0, std::exp(out.ratio_log));
        out.real_offset = std::acos(ratio) / (2.0 * a);
    } else {
        out.root_case = RootCase::ComplexRoots;
        out.r1 = std::min(acosh_of_exp(out.ratio_log) / (2.0 * a), r);
        out.real_offset = 0.0;
    }
    return out;
}

std::vector<R1CurvePoint> r1_curve(const LPDescriptor& phi, double r,
                                   const std::vector<double>& a_grid) {
    if (!(r > 0.0)) throw std::invalid_argument("r1_curve: r must be positive");
    if (a_grid.empty()) throw std::invalid_argument("r1_curve: grid must be nonempty");
    for (std::size_t k = 0; k < a_grid.size(); ++k) {
        if (!(a_grid[k] > 0.0))
            throw std::invalid_argument("r1_curve: grid entries must be positive");
        if (k > 0 && !(a_grid[k] > a_grid[k - 1]))
            throw std::invalid_argument("r1_curve: grid must be ascending");
    }
    std::vector<R1CurvePoint> out;
    out.reserve(a_grid.size());
    for (double a : a_grid) {
        ExtremalFamily fam{FamilyKind::FA, a, r, 1};
        R1CurvePoint point;
        point.a = a;
        point.result = apply_even_phi_fa(phi, fam);
        point.lower_bound = r - (phi.log_eval_imag_axis(2.0 * a) + kLn2) / (2.0 * a);
        out.push_back(point);
    }
    return out;
}

R1Result solve_ga_roots(const LPDescriptor& phi1, int m, const ExtremalFamily& fam) {
    check_family(fam);
    if (fam.kind != FamilyKind::GA)
        throw std::invalid_argument("solve_ga_roots: family kind must be GA");
    if (m < 1) throw std::invalid_argument("solve_ga_roots: m must be positive");
    if (m != fam.m) throw std::invalid_argument("solve_ga_roots: m disagrees with family");
    if (!phi1.is_even())
        throw std::invalid_argument("solve_ga_roots: operator cofactor must be even");
    check_unit_at_zero(phi1, "solve_ga_roots");

    const double a = fam.a;
    const double r = fam.r;
    const double l2 = phi1.log_eval_imag_axis(2.0 * a);
    const double l4 = phi1.log_eval_imag_axis(4.0 * a);

    // Negative branch of the quadratic in cos(2az), assembled in log-space:
    // |v| = (cosh(2ar) phi1(2ai) + sqrt(cosh^2(2ar) phi1(2ai)^2
    //        + 2^{4m-1} phi1(4ai)^2)) / (2^{2m} phi1(4ai)).
    const double L1 = logcosh(2.0 * a * r) + l2;
    const double Ls = 0.5 * logsumexp2(2.0 * L1, (4.0 * m - 1.0) * kLn2 + 2.0 * l4);
    const double Ln = logsumexp2(L1, Ls);
    const double vlog = Ln - (2.0 * m * kLn2 + l4);

    R1Result out;
    out.ratio_log = vlog;
    if (vlog > 0.0) {
        out.root_case = RootCase::ComplexRoots;
        out.r1 = std::min(acosh_of_exp(vlog) / (2.0 * a), r);
        out.real_offset = 0.0;
    } else {
        // At moderate a the branch value can land inside [-1, 0): the image
        // polynomial then has real zeros displaced from the columns.
        out.root_case = RootCase::RealRoots;
        out.r1 = 0.0;
        out.real_offset = std::acos(std::min(1.0, std::exp(vlog))) / (2.0 * a);
    }
    return out;
}

double laguerre_b(const LPDescriptor& phi) {
    const TaylorWindow w = phi.taylor_window(2);
    const double a0 = w.coeffs[0];
    if (a0 == 0.0)
        throw std::domain_error("laguerre_b: operator symbol vanishes at 0");
    const double d1 = w.coeffs[1] / a0;
    const double d2 = w.coeffs[2] / a0;
    return d1 * d1 - 2.0 * d2;
}

StripReport quadratic_testcase(const LPDescriptor& phi, double a, double r) {
    if (!(a > 0.0) || !(r > 0.0))
        throw std::invalid_argument("quadratic_testcase: a and r must be positive");
    check_unit_at_zero(phi, "quadratic_testcase");
    const ComplexPolynomial f({Complex(r * r), Complex(0.0), Complex(1.0)});
    const ComplexPolynomial g = apply_series(phi.scaled(a), f);
    return strip_width(find_roots(g));
}

}  // namespace zstrip
