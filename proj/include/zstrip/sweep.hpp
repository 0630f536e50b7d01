#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "zstrip/ensemble.hpp"
#include "zstrip/lp.hpp"

namespace zstrip {

// Largest output strip half-width over an ensemble, with per-item exclusion
// counts: n_failed items hit the root-finder residual budget, n_zero items
// were annihilated by the operator.
struct MeasureResult {
    double rprime = 0.0;
    int n_failed = 0;
    int n_zero = 0;
};

MeasureResult measure_rprime(const LPDescriptor& phi, double a,
                             const std::vector<ComplexPolynomial>& ensemble);

// One grid point of a shrink sweep, with the two sandwich bounds
// sqrt(r^2 - b a^2) <= r' <= sqrt(r^2 - c a^2) evaluated alongside.
struct SweepRecord {
    std::string phi_id;
    double a = 0.0;
    double r = 0.0;
    double measured_rprime = 0.0;
    double bound_lower = 0.0;
    double bound_upper_c = 0.0;
    int n_samples = 0;
    std::uint64_t seed = 0;
};

struct CPhiEstimate {
    double c_hat = 0.0;
    bool no_shrink = false;
    std::vector<SweepRecord> records;
    int n_failed = 0;
};

// Fits the largest c with measured_rprime(a) <= sqrt(r^2 - c a^2) across the
// grid (min of the per-point ratios; a uniform bound dies at its worst point).
// The ensemble is built from spec with its r field overridden by r; the grid
// is processed in ascending order.
CPhiEstimate estimate_c_phi(const LPDescriptor& phi, double r,
                            std::vector<double> a_grid, EnsembleSpec spec);

// Real-zero counting function of the operator symbol on a grid of radii.
struct DensityReport {
    std::vector<double> t_grid;
    std::vector<long> n_of_t;
    // min of n(t)/t over the top half of the grid.
    double liminf_proxy = 0.0;
};

DensityReport density_report(const LPDescriptor& phi, double t_max, int steps);

}  // namespace zstrip
