#pragma once

#include <string>

#include "json.hpp"
#include "zstrip/extremal.hpp"
#include "zstrip/lp.hpp"
#include "zstrip/poly.hpp"
#include "zstrip/roots.hpp"
#include "zstrip/sweep.hpp"

namespace zstrip {

inline constexpr const char* kVersion = "1.0.0";

// Insertion-ordered JSON keeps every emitted document byte-stable.
using Json = nlohmann::ordered_json;

// {"coeffs": [[re, im], ...]} ascending degree; entries may also be plain
// numbers on input. A {"result": ...} envelope from a previous run is
// unwrapped transparently by every *_from_json reader.
Json poly_to_json(const ComplexPolynomial& p);
ComplexPolynomial poly_from_json(const Json& j);

// {"family": "...", <params>, "declared_order", "declared_type", "genus"}.
// Families: polynomial_real_roots {roots, c, m}, exp_linear {delta},
// exp_quadratic {gamma}, cosine {a, b}, sine {a, b}, product {factors}.
// declared_type is a number, "minimal", or "not-applicable".
Json descriptor_to_json(const LPDescriptor& phi);
LPDescriptor descriptor_from_json(const Json& j);

// 16-hex-digit FNV-1a of the canonical descriptor serialization.
std::string descriptor_id(const LPDescriptor& phi);

Json rootset_to_json(const RootSet& rs);
Json strip_to_json(const StripReport& report);
Json r1_to_json(const R1Result& result);
Json curve_to_json(const std::vector<R1CurvePoint>& curve);
Json sweep_to_json(const CPhiEstimate& estimate);
Json density_to_json(const DensityReport& report);

// Tabular projections. The sweep header is the fixed contract
// "phi_id,a,r,measured_rprime,bound_lower,bound_upper_c,n_samples,seed";
// an empty record list yields the header alone.
std::string sweep_to_csv(const std::vector<SweepRecord>& records);
std::string density_to_csv(const DensityReport& report);

// {"version", "command", "params", "result"} wrapper for CLI output.
Json envelope(const std::string& command, Json params, Json result);

}  // namespace zstrip
