#pragma once

#include <stdexcept>
#include <utility>
#include <vector>

#include "zstrip/poly.hpp"

namespace zstrip {

// All roots of a polynomial, sorted by (Re, Im). For real-coefficient inputs
// `pairing` lists index pairs (i, j) of conjugate partners, i < j; real roots
// and non-real inputs leave it empty. `residuals[k]` is |p(roots[k])| divided
// by the evaluation scale sum |c_j||x|^j.
struct RootSet {
    std::vector<Complex> roots;
    std::vector<std::pair<int, int>> pairing;
    std::vector<double> residuals;
};

// Zero-strip summary of a root set: half_width is the largest |Im| over the
// non-real roots (0 when all are real at the tolerance used). n_real counts
// roots on the axis; n_complex counts conjugate pairs off it.
struct StripReport {
    double half_width = 0.0;
    int n_real = 0;
    int n_complex = 0;
    double tolerance_used = 0.0;
};

struct RootFindOptions {
    int max_iterations = 200;
    double residual_budget = 1e-6;
};

// Thrown when the iteration stops without meeting the residual budget; the
// best root set found so far rides along for diagnostics.
class RootFindFailure : public std::runtime_error {
  public:
    RootFindFailure(std::string what, RootSet best)
        : std::runtime_error(std::move(what)), best_(std::move(best)) {}
    const RootSet& best() const { return best_; }

  private:
    RootSet best_;
};

class PairingFailure : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

RootSet find_roots(const ComplexPolynomial& p, const RootFindOptions& options = {});

// real_tol <= 0 picks max(1e-12, 1e-9 * max |root|).
StripReport strip_width(const RootSet& rs, double real_tol = 0.0);

// Forces exact conjugate symmetry on a numerically near-symmetric root set:
// roots within tol * max(1, |x|) of the real axis snap onto it, the rest are
// averaged against their mirror partner so conj(upper) == lower bit for bit.
RootSet symmetrize_conjugates(const RootSet& rs, double tol = 1e-6);

}  // namespace zstrip
