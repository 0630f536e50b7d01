#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdint>
#include <limits>
#include <sstream>

#include "zstrip/roots.hpp"

namespace zstrip {

namespace {

using LComplex = std::complex<long double>;

constexpr long double kLdEps = std::numeric_limits<long double>::epsilon();

bool finite(LComplex z) { return std::isfinite(z.real()) && std::isfinite(z.imag()); }

struct EvalResult {
    LComplex p;
    LComplex dp;
    long double scale;
};

// One Horner pass gives p(x), p'(x) and the evaluation scale sum |c_k||x|^k.
EvalResult eval_with_scale(const std::vector<LComplex>& c, LComplex x) {
    std::size_t n = c.size() - 1;
    LComplex p = c[n];
    LComplex dp(0.0L, 0.0L);
    long double sc = std::abs(c[n]);
    const long double ax = std::abs(x);
    for (std::size_t k = n; k-- > 0;) {
        dp = dp * x + p;
        p = p * x + c[k];
        sc = sc * ax + std::abs(c[k]);
    }
    return {p, dp, sc};
}

long double fujiwara_radius(const std::vector<LComplex>& c) {
    const std::size_t n = c.size() - 1;
    const long double lead = std::abs(c[n]);
    long double best = 0.0L;
    for (std::size_t k = 1; k <= n; ++k) {
        const long double mag = std::abs(c[n - k]);
        if (mag == 0.0L) continue;
        best = std::max(best, std::pow(mag / lead, 1.0L / static_cast<long double>(k)));
    }
    return 2.0L * best;
}

std::vector<LComplex> solve_quadratic(const std::vector<LComplex>& c) {
    const LComplex a = c[2];
    const LComplex b = c[1];
    const LComplex c0 = c[0];
    LComplex s = std::sqrt(b * b - 4.0L * a * c0);
    if (std::real(std::conj(b) * s) < 0.0L) s = -s;
    const LComplex q = -(b + s) / 2.0L;
    if (std::abs(q) == 0.0L) return {LComplex(0.0L), LComplex(0.0L)};
    return {q / a, c0 / q};
}

// Ehrlich-Aberth with Gauss-Seidel updates on a magnitude-normalized,
// radius-rescaled copy of the coefficients. Returns roots of the original.
std::vector<LComplex> aberth_solve(const std::vector<LComplex>& c,
                                   const RootFindOptions& options) {
    const int n = static_cast<int>(c.size()) - 1;

    long double mag_max = 0.0L;
    long double mag_min = std::numeric_limits<long double>::infinity();
    for (const LComplex& ck : c) {
        const long double m = std::abs(ck);
        if (m == 0.0L) continue;
        mag_max = std::max(mag_max, m);
        mag_min = std::min(mag_min, m);
    }
    const long double radius = fujiwara_radius(c);
    long double lambda = 1.0L;
    if (mag_max / mag_min > 1e8L || radius > 1e3L || radius < 1e-3L)
        lambda = std::clamp(radius, 1e-8L, 1e8L);

    // q_k = c_k lambda^k scaled so max |q_k| = 1, assembled in log space so
    // the rescaling itself cannot overflow.
    const long double llog = std::log(lambda);
    long double top = -std::numeric_limits<long double>::infinity();
    for (std::size_t k = 0; k < c.size(); ++k) {
        const long double m = std::abs(c[k]);
        if (m > 0.0L) top = std::max(top, std::log(m) + static_cast<long double>(k) * llog);
    }
    std::vector<LComplex> q(c.size());
    for (std::size_t k = 0; k < c.size(); ++k)
        q[k] = c[k] * std::exp(static_cast<long double>(k) * llog - top);

    long double r0 = 0.0L;
    const long double q_radius = fujiwara_radius(q);
    if (std::abs(q[0]) > 0.0L)
        r0 = std::pow(std::abs(q[0]) / std::abs(q[n]), 1.0L / static_cast<long double>(n));
    r0 = std::clamp(r0, 1e-3L * q_radius, q_radius);

    std::vector<LComplex> x(static_cast<std::size_t>(n));
    const long double theta0 = 0.93L;
    for (int j = 0; j < n; ++j) {
        const long double wob =
            static_cast<long double>((static_cast<std::uint64_t>(j) * 2654435761ULL) % 1024) /
                1024.0L -
            0.5L;
        const long double rad = r0 * (1.0L + 0.05L * wob);
        const long double th =
            theta0 + 2.0L * static_cast<long double>(M_PIl) * static_cast<long double>(j) /
                         static_cast<long double>(n);
        x[static_cast<std::size_t>(j)] = LComplex(rad * std::cos(th), rad * std::sin(th));
    }

    std::vector<bool> done(static_cast<std::size_t>(n), false);
    for (int iter = 0; iter < options.max_iterations; ++iter) {
        long double max_step = 0.0L;
        bool guard_fired = false;
        int n_done = 0;
        for (int i = 0; i < n; ++i) {
            if (done[static_cast<std::size_t>(i)]) {
                ++n_done;
                continue;
            }
            LComplex& xi = x[static_cast<std::size_t>(i)];
            for (int j = 0; j < n; ++j)
                if (j != i && x[static_cast<std::size_t>(j)] == xi)
                    xi += LComplex(1e-6L, 1e-6L) * (1.0L + std::abs(xi)) *
                          static_cast<long double>(i + 1);
            const EvalResult ev = eval_with_scale(q, xi);
            if (!finite(ev.p) || !finite(ev.dp)) {
                xi *= 0.5L;
                guard_fired = true;
                continue;
            }
            if (std::abs(ev.p) <= 8.0L * kLdEps * ev.scale) {
                done[static_cast<std::size_t>(i)] = true;
                ++n_done;
                continue;
            }
            if (ev.dp == LComplex(0.0L)) {
                xi += LComplex(1e-3L, 2e-3L) * (1.0L + std::abs(xi));
                guard_fired = true;
                continue;
            }
            const LComplex newton = ev.p / ev.dp;
            if (!finite(newton)) {
                xi += LComplex(1e-3L, 2e-3L) * (1.0L + std::abs(xi));
                guard_fired = true;
                continue;
            }
            LComplex repel(0.0L, 0.0L);
            for (int j = 0; j < n; ++j)
                if (j != i) repel += 1.0L / (xi - x[static_cast<std::size_t>(j)]);
            const LComplex denom = LComplex(1.0L) - newton * repel;
            LComplex step = (denom == LComplex(0.0L)) ? newton : newton / denom;
            if (!finite(step)) step = newton;
            xi -= step;
            max_step = std::max(max_step, std::abs(step) / (1.0L + std::abs(xi)));
        }
        if (n_done == n) break;
        if (max_step < 1e-14L && !guard_fired) break;
    }

    for (LComplex& xi : x) xi *= lambda;
    return x;
}

// A few guarded Newton steps against the unscaled coefficients take out the
// error introduced by solving the rescaled copy.
void polish(const std::vector<LComplex>& c, std::vector<LComplex>& roots) {
    for (LComplex& x : roots) {
        for (int step = 0; step < 3; ++step) {
            const EvalResult ev = eval_with_scale(c, x);
            if (!finite(ev.p) || !finite(ev.dp) || ev.dp == LComplex(0.0L)) break;
            const LComplex d = ev.p / ev.dp;
            if (!finite(d) || std::abs(d) > 0.1L * (1.0L + std::abs(x))) break;
            x -= d;
        }
    }
}

// Union-find merge of nearly coincident roots; every member of a cluster is
// replaced by the cluster centroid so multiplicities stay intact.
void cluster_roots(std::vector<Complex>& roots) {
    const std::size_t n = roots.size();
    std::vector<std::size_t> parent(n);
    for (std::size_t i = 0; i < n; ++i) parent[i] = i;
    auto find = [&](std::size_t i) {
        while (parent[i] != i) {
            parent[i] = parent[parent[i]];
            i = parent[i];
        }
        return i;
    };
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
            const double tol =
                1e-7 * std::max(1.0, std::max(std::abs(roots[i]), std::abs(roots[j])));
            if (std::abs(roots[i] - roots[j]) <= tol) parent[find(i)] = find(j);
        }
    for (std::size_t rep = 0; rep < n; ++rep) {
        if (find(rep) != rep) continue;
        Complex sum(0.0, 0.0);
        int count = 0;
        for (std::size_t i = 0; i < n; ++i)
            if (find(i) == rep) {
                sum += roots[i];
                ++count;
            }
        if (count > 1) {
            const Complex centroid = sum / static_cast<double>(count);
            for (std::size_t i = 0; i < n; ++i)
                if (find(i) == rep) roots[i] = centroid;
        }
    }
}

bool root_less(const Complex& a, const Complex& b) {
    if (a.real() != b.real()) return a.real() < b.real();
    return a.imag() < b.imag();
}

}  // namespace

RootSet find_roots(const ComplexPolynomial& p, const RootFindOptions& options) {
    if (p.degree() < 1)
        throw std::invalid_argument("find_roots: polynomial degree must be at least 1");

    std::vector<Complex> c = p.coeffs();
    int m0 = 0;
    while (c.size() > 1 && std::abs(c.front()) <= kTrimThreshold) {
        c.erase(c.begin());
        ++m0;
    }
    const int n = static_cast<int>(c.size()) - 1;

    std::vector<LComplex> lc(c.size());
    for (std::size_t k = 0; k < c.size(); ++k)
        lc[k] = LComplex(c[k].real(), c[k].imag());

    std::vector<LComplex> lroots;
    if (n == 1) {
        lroots.push_back(-lc[0] / lc[1]);
    } else if (n == 2) {
        lroots = solve_quadratic(lc);
    } else if (n >= 3) {
        lroots = aberth_solve(lc, options);
    }
    polish(lc, lroots);

    std::vector<Complex> roots;
    roots.reserve(static_cast<std::size_t>(n + m0));
    for (const LComplex& x : lroots)
        roots.emplace_back(static_cast<double>(x.real()), static_cast<double>(x.imag()));
    cluster_roots(roots);
    for (int k = 0; k < m0; ++k) roots.emplace_back(0.0, 0.0);
    std::sort(roots.begin(), roots.end(), root_less);

    // Backward-error residuals against the full original coefficient list.
    std::vector<LComplex> lfull(p.coeffs().size());
    for (std::size_t k = 0; k < lfull.size(); ++k)
        lfull[k] = LComplex(p.coeff(static_cast<int>(k)).real(),
                            p.coeff(static_cast<int>(k)).imag());
    double origin_res = 0.0;
    if (m0 > 0) {
        long double dropped = 0.0L;
        long double mag_max = 0.0L;
        for (std::size_t k = 0; k < lfull.size(); ++k) {
            if (static_cast<int>(k) < m0) dropped += std::abs(lfull[k]);
            mag_max = std::max(mag_max, std::abs(lfull[k]));
        }
        origin_res = static_cast<double>(dropped / mag_max);
    }
    RootSet rs;
    rs.roots = roots;
    rs.residuals.resize(roots.size(), 0.0);
    double max_res = 0.0;
    for (std::size_t k = 0; k < roots.size(); ++k) {
        double res;
        if (roots[k] == Complex(0.0, 0.0) && m0 > 0) {
            res = origin_res;
        } else {
            const EvalResult ev =
                eval_with_scale(lfull, LComplex(roots[k].real(), roots[k].imag()));
            res = ev.scale > 0.0L ? static_cast<double>(std::abs(ev.p) / ev.scale)
                                  : static_cast<double>(std::abs(ev.p));
        }
        if (!std::isfinite(res)) res = std::numeric_limits<double>::infinity();
        rs.residuals[k] = res;
        max_res = std::max(max_res, res);
    }

    if (max_res > options.residual_budget) {
        std::ostringstream msg;
        msg << "root finding failed: max residual " << max_res << " exceeds budget "
            << options.residual_budget;
        throw RootFindFailure(msg.str(), rs);
    }

    if (p.is_real(1e-12)) {
        std::vector<int> upper, lower;
        for (std::size_t i = 0; i < rs.roots.size(); ++i) {
            if (rs.roots[i].imag() > 0.0) upper.push_back(static_cast<int>(i));
            else if (rs.roots[i].imag() < 0.0) lower.push_back(static_cast<int>(i));
        }
        std::vector<bool> used(lower.size(), false);
        for (int u : upper) {
            const Complex target = std::conj(rs.roots[static_cast<std::size_t>(u)]);
            double best_d = std::numeric_limits<double>::infinity();
            int best = -1;
            for (std::size_t k = 0; k < lower.size(); ++k) {
                if (used[k]) continue;
                const double d = std::abs(rs.roots[static_cast<std::size_t>(lower[k])] - target);
                if (d < best_d) {
                    best_d = d;
                    best = static_cast<int>(k);
                }
            }
            const double tol = 1e-6 * std::max(1.0, std::abs(target));
            if (best >= 0 && best_d <= tol) {
                used[static_cast<std::size_t>(best)] = true;
                const int l = lower[static_cast<std::size_t>(best)];
                rs.pairing.emplace_back(std::min(u, l), std::max(u, l));
            }
        }
        std::sort(rs.pairing.begin(), rs.pairing.end());
    }
    return rs;
}

StripReport strip_width(const RootSet& rs, double real_tol) {
    double mag_max = 0.0;
    for (const Complex& x : rs.roots) mag_max = std::max(mag_max, std::abs(x));
    const double tol = real_tol > 0.0 ? real_tol : std::max(1e-12, 1e-9 * mag_max);
    StripReport report;
    report.tolerance_used = tol;
    int nonreal = 0;
    for (const Complex& x : rs.roots) {
        if (std::abs(x.imag()) <= tol) {
            ++report.n_real;
        } else {
            ++nonreal;
            report.half_width = std::max(report.half_width, std::abs(x.imag()));
        }
    }
    report.n_complex = (nonreal + 1) / 2;
    return report;
}

RootSet symmetrize_conjugates(const RootSet& rs, double tol) {
    RootSet out = rs;
    out.pairing.clear();
    std::vector<int> upper, lower;
    for (std::size_t i = 0; i < out.roots.size(); ++i) {
        const Complex x = out.roots[i];
        if (std::abs(x.imag()) <= tol * std::max(1.0, std::abs(x)))
            out.roots[i] = Complex(x.real(), 0.0);
        else if (x.imag() > 0.0)
            upper.push_back(static_cast<int>(i));
        else
            lower.push_back(static_cast<int>(i));
    }
    if (upper.size() != lower.size())
        throw PairingFailure(
            "conjugate symmetrization failed: unbalanced half-plane root counts");
    std::vector<bool> used(lower.size(), false);
    for (int u : upper) {
        const Complex target = std::conj(out.roots[static_cast<std::size_t>(u)]);
        double best_d = std::numeric_limits<double>::infinity();
        int best = -1;
        for (std::size_t k = 0; k < lower.size(); ++k) {
            if (used[k]) continue;
            const double d = std::abs(out.roots[static_cast<std::size_t>(lower[k])] - target);
            if (d < best_d) {
                best_d = d;
                best = static_cast<int>(k);
            }
        }
        if (best < 0 ||
            best_d > tol * std::max(1.0, std::abs(out.roots[static_cast<std::size_t>(u)])))
            throw PairingFailure(
                "conjugate symmetrization failed: no partner within tolerance");
        used[static_cast<std::size_t>(best)] = true;
        const int l = lower[static_cast<std::size_t>(best)];
        const Complex xu = out.roots[static_cast<std::size_t>(u)];
        const Complex xl = out.roots[static_cast<std::size_t>(l)];
        const Complex w((xu.real() + xl.real()) / 2.0, (xu.imag() - xl.imag()) / 2.0);
        out.roots[static_cast<std::size_t>(u)] = w;
        out.roots[static_cast<std::size_t>(l)] = std::conj(w);
        out.pairing.emplace_back(std::min(u, l), std::max(u, l));
    }
    std::sort(out.pairing.begin(), out.pairing.end());
    return out;
}

}  // namespace zstrip
