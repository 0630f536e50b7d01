#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

#include "zstrip/extremal.hpp"
#include "zstrip/roots.hpp"
#include "zstrip/serialize.hpp"
#include "zstrip/sweep.hpp"

namespace zstrip {

namespace {

constexpr double kPi = std::numbers::pi;

// Integers strictly inside (lo, hi).
long count_lattice(double lo, double hi) {
    if (!(hi > lo)) return 0;
    const double k_lo = std::floor(lo) + 1.0;
    const double k_hi = std::ceil(hi) - 1.0;
    if (k_hi < k_lo) return 0;
    return static_cast<long>(k_hi - k_lo) + 1;
}

long count_real_zeros(const LPDescriptor::Family& fam, double t) {
    if (const auto* p = std::get_if<PolynomialRealRoots>(&fam)) {
        long n = p->m;
        for (double root : p->roots)
            if (std::abs(root) < t) ++n;
        return n;
    }
    if (const auto* c = std::get_if<Cosine>(&fam)) {
        // Zeros at (pi/2 + k pi - b)/a.
        const double lo = (-t * c->a - kPi / 2.0 + c->b) / kPi;
        const double hi = (t * c->a - kPi / 2.0 + c->b) / kPi;
        return count_lattice(lo, hi);
    }
    if (const auto* s = std::get_if<Sine>(&fam)) {
        // Zeros at (k pi - b)/a.
        const double lo = (-t * s->a + s->b) / kPi;
        const double hi = (t * s->a + s->b) / kPi;
        return count_lattice(lo, hi);
    }
    if (const auto* prod = std::get_if<Product>(&fam)) {
        long n = 0;
        for (const LPDescriptor& factor : prod->factors)
            n += count_real_zeros(factor.family(), t);
        return n;
    }
    throw std::invalid_argument(
        "density_report: operator family has no enumerable real zero set");
}

}  // namespace

MeasureResult measure_rprime(const LPDescriptor& phi, double a,
                             const std::vector<ComplexPolynomial>& ensemble) {
    if (ensemble.empty())
        throw std::invalid_argument("measure_rprime: ensemble must be nonempty");
    if (!(a > 0.0)) throw std::invalid_argument("measure_rprime: a must be positive");

    const LPDescriptor scaled = phi.scaled(a);
    MeasureResult out;
    for (const ComplexPolynomial& f : ensemble) {
        const ComplexPolynomial g = apply_series(scaled, f);
        if (g.is_zero()) {
            ++out.n_zero;
            continue;
        }
        if (g.degree() < 1) continue;  // nonzero constant: no zeros, width 0
        try {
            const StripReport report = strip_width(find_roots(g));
            out.rprime = std::max(out.rprime, report.half_width);
        } catch (const RootFindFailure&) {
            ++out.n_failed;
        }
    }
    return out;
}

CPhiEstimate estimate_c_phi(const LPDescriptor& phi, double r,
                            std::vector<double> a_grid, EnsembleSpec spec) {
    if (!(r > 0.0)) throw std::invalid_argument("estimate_c_phi: r must be positive");
    if (a_grid.empty()) throw std::invalid_argument("estimate_c_phi: grid must be nonempty");
    for (double a : a_grid)
        if (!(a > 0.0))
            throw std::invalid_argument("estimate_c_phi: grid entries must be positive");
    std::sort(a_grid.begin(), a_grid.end());

    spec.r = r;
    const std::vector<ComplexPolynomial> ensemble = generate_ensemble(spec);
    const double b = laguerre_b(phi);
    const std::string id = descriptor_id(phi);

    CPhiEstimate out;
    out.records.reserve(a_grid.size());
    double c_hat = std::numeric_limits<double>::infinity();
    bool shrink_seen = false;
    for (double a : a_grid) {
        const MeasureResult mr = measure_rprime(phi, a, ensemble);
        out.n_failed += mr.n_failed;
        const double rp = std::min(mr.rprime, r);
        const double gap = r * r - rp * rp;
        if (gap > 1e-9 * r * r) shrink_seen = true;
        c_hat = std::min(c_hat, gap / (a * a));

        SweepRecord rec;
        rec.phi_id = id;
        rec.a = a;
        rec.r = r;
        rec.measured_rprime = rp;
        rec.bound_lower = std::sqrt(std::max(0.0, r * r - b * a * a));
        rec.n_samples = static_cast<int>(ensemble.size());
        rec.seed = spec.seed;
        out.records.push_back(rec);
    }
    out.no_shrink = !shrink_seen;
    out.c_hat = out.no_shrink ? 0.0 : c_hat;
    for (SweepRecord& rec : out.records)
        rec.bound_upper_c = std::sqrt(std::max(0.0, r * r - out.c_hat * rec.a * rec.a));
    return out;
}

DensityReport density_report(const LPDescriptor& phi, double t_max, int steps) {
    if (!(t_max > 0.0)) throw std::invalid_argument("density_report: t_max must be positive");
    if (steps < 1) throw std::invalid_argument("density_report: steps must be positive");

    DensityReport out;
    out.t_grid.reserve(static_cast<std::size_t>(steps));
    out.n_of_t.reserve(static_cast<std::size_t>(steps));
    double proxy = std::numeric_limits<double>::infinity();
    for (int i = 1; i <= steps; ++i) {
        const double t = t_max * i / steps;
        const long n = count_real_zeros(phi.family(), t);
        out.t_grid.push_back(t);
        out.n_of_t.push_back(n);
        if (t >= t_max / 2.0) proxy = std::min(proxy, static_cast<double>(n) / t);
    }
    out.liminf_proxy = proxy;
    return out;
}

}  // namespace zstrip
