#pragma once

#include <vector>

#include "zstrip/lp.hpp"
#include "zstrip/poly.hpp"
#include "zstrip/roots.hpp"

namespace zstrip {

// Numerically safe building blocks for the extremal computations. All three
// work on logarithms so that arguments like cosh(200) never materialize.
double logcosh(double x);
// acosh(exp(L)) for L >= 0; returns 0 for L <= 0.
double acosh_of_exp(double L);
// log(exp(a) + exp(b)).
double logsumexp2(double a, double b);

enum class FamilyKind { FA, GA };

// FA is (1/2)(cos 2az + cosh 2ar), GA its square; both vanish on the two
// horizontal zero rows Im z = +-r with real parts (2k+1)pi/(2a). m tags the
// monomial order z^{2m} phi_1 used with GA.
struct ExtremalFamily {
    FamilyKind kind = FamilyKind::FA;
    double a = 1.0;
    double r = 1.0;
    int m = 1;
};

enum class RootCase { RealRoots, ComplexRoots };

// Outcome of pushing an even operator through a family member. ratio_log is
// log(cosh(2ar)/phi(2ai)) for FA and log|v| of the negative cosine branch for
// GA. ComplexRoots: r1 in (0, r] is the output strip half-width and
// real_offset is 0. RealRoots: r1 is 0 and real_offset in [0, pi/(4a)] is the
// displacement of each output zero from its reference column (2k+1)pi/(2a),
// i.e. cos(2a * real_offset) = exp(ratio_log).
struct R1Result {
    RootCase root_case = RootCase::ComplexRoots;
    double r1 = 0.0;
    double ratio_log = 0.0;
    double real_offset = 0.0;
};

// Polynomial surrogate carrying the 4N (FA) or 8N (GA, doubled) family zeros
// nearest the origin. N is the number of mirrored column pairs; N <= 40.
ComplexPolynomial truncate_family(const ExtremalFamily& fam, int N);

// phi(D) applied to an FA member: phi even, phi(0)=1, positive on the
// imaginary axis. Works entirely in log-space.
R1Result apply_even_phi_fa(const LPDescriptor& phi, const ExtremalFamily& fam);

struct R1CurvePoint {
    double a = 0.0;
    R1Result result;
    // r - (log phi(2ai) + log 2)/(2a): the output strip cannot be thinner.
    double lower_bound = 0.0;
};

// apply_even_phi_fa across an ascending grid of frequencies at fixed r.
std::vector<R1CurvePoint> r1_curve(const LPDescriptor& phi, double r,
                                   const std::vector<double>& a_grid);

// phi(D) = (aD)^{2m} phi_1(aD)-style operators on a GA member: solves the
// quadratic in cos(2az) and reports the negative branch. Requires m == fam.m.
R1Result solve_ga_roots(const LPDescriptor& phi1, int m, const ExtremalFamily& fam);

// phi'(0)^2 - phi''(0) after normalizing phi(0) to 1.
double laguerre_b(const LPDescriptor& phi);

// Applies phi(aD) to z^2 + r^2 and measures the root strip. The closed form
// predicts half-width sqrt(max(0, r^2 - b_phi a^2)).
StripReport quadratic_testcase(const LPDescriptor& phi, double a, double r);

}  // namespace zstrip
