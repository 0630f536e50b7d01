#include <charconv>
#include <cstdint>
#include <stdexcept>

#include "zstrip/serialize.hpp"

namespace zstrip {

namespace {

std::string num_str(double x) {
    char buf[32];
    const auto res = std::to_chars(buf, buf + sizeof buf, x);
    return std::string(buf, res.ptr);
}

Json complex_to_json(Complex z) { return Json::array({z.real(), z.imag()}); }

Complex complex_from_json(const Json& j) {
    if (j.is_number()) return Complex(j.get<double>(), 0.0);
    if (j.is_array() && j.size() == 2)
        return Complex(j[0].get<double>(), j[1].get<double>());
    throw std::invalid_argument("complex value: expected [re, im] or a number");
}

const Json& unwrap(const Json& j) {
    if (j.is_object() && j.contains("result")) return j.at("result");
    return j;
}

Json growth_to_json(GrowthType t) {
    switch (t.kind) {
        case GrowthType::Kind::Value: return Json(t.value);
        case GrowthType::Kind::Minimal: return Json("minimal");
        case GrowthType::Kind::NotApplicable: break;
    }
    return Json("not-applicable");
}

GrowthType growth_from_json(const Json& j) {
    if (j.is_number()) return GrowthType::of(j.get<double>());
    if (j.is_string()) {
        const std::string s = j.get<std::string>();
        if (s == "minimal") return GrowthType::minimal();
        if (s == "not-applicable") return GrowthType::not_applicable();
    }
    throw std::invalid_argument(
        "declared_type: expected a number, \"minimal\", or \"not-applicable\"");
}

std::string case_name(RootCase c) {
    return c == RootCase::RealRoots ? "REAL_ROOTS" : "COMPLEX_ROOTS";
}

Json record_to_json(const SweepRecord& rec) {
    Json j;
    j["phi_id"] = rec.phi_id;
    j["a"] = rec.a;
    j["r"] = rec.r;
    j["measured_rprime"] = rec.measured_rprime;
    j["bound_lower"] = rec.bound_lower;
    j["bound_upper_c"] = rec.bound_upper_c;
    j["n_samples"] = rec.n_samples;
    j["seed"] = rec.seed;
    return j;
}

}  // namespace

Json poly_to_json(const ComplexPolynomial& p) {
    Json coeffs = Json::array();
    for (const Complex& c : p.coeffs()) coeffs.push_back(complex_to_json(c));
    Json j;
    j["coeffs"] = std::move(coeffs);
    return j;
}

ComplexPolynomial poly_from_json(const Json& raw) {
    const Json& j = unwrap(raw);
    if (!j.is_object() || !j.contains("coeffs"))
        throw std::invalid_argument("polynomial: expected an object with \"coeffs\"");
    const Json& arr = j.at("coeffs");
    if (!arr.is_array())
        throw std::invalid_argument("polynomial: \"coeffs\" must be an array");
    std::vector<Complex> coeffs;
    coeffs.reserve(arr.size());
    for (const Json& entry : arr) coeffs.push_back(complex_from_json(entry));
    return ComplexPolynomial(std::move(coeffs));
}

Json descriptor_to_json(const LPDescriptor& phi) {
    Json j;
    if (const auto* p = std::get_if<PolynomialRealRoots>(&phi.family())) {
        j["family"] = "polynomial_real_roots";
        j["roots"] = p->roots;
        j["c"] = p->c;
        j["m"] = p->m;
    } else if (const auto* e = std::get_if<ExpLinear>(&phi.family())) {
        j["family"] = "exp_linear";
        j["delta"] = e->delta;
    } else if (const auto* q = std::get_if<ExpQuadratic>(&phi.family())) {
        j["family"] = "exp_quadratic";
        j["gamma"] = q->gamma;
    } else if (const auto* c = std::get_if<Cosine>(&phi.family())) {
        j["family"] = "cosine";
        j["a"] = c->a;
        j["b"] = c->b;
    } else if (const auto* s = std::get_if<Sine>(&phi.family())) {
        j["family"] = "sine";
        j["a"] = s->a;
        j["b"] = s->b;
    } else {
        const auto& prod = std::get<Product>(phi.family());
        j["family"] = "product";
        Json factors = Json::array();
        for (const LPDescriptor& f : prod.factors) factors.push_back(descriptor_to_json(f));
        j["factors"] = std::move(factors);
    }
    j["declared_order"] = phi.declared_order();
    j["declared_type"] = growth_to_json(phi.declared_type());
    j["genus"] = phi.genus();
    return j;
}

LPDescriptor descriptor_from_json(const Json& raw) {
    const Json& j = unwrap(raw);
    if (!j.is_object() || !j.contains("family"))
        throw std::invalid_argument("descriptor: expected an object with \"family\"");
    const std::string family = j.at("family").get<std::string>();

    LPDescriptor phi;
    if (family == "polynomial_real_roots") {
        PolynomialRealRoots p;
        if (j.contains("roots")) p.roots = j.at("roots").get<std::vector<double>>();
        p.c = j.value("c", 1.0);
        p.m = j.value("m", 0);
        phi = LPDescriptor(p);
    } else if (family == "exp_linear") {
        phi = LPDescriptor(ExpLinear{j.value("delta", 0.0)});
    } else if (family == "exp_quadratic") {
        phi = LPDescriptor(ExpQuadratic{j.value("gamma", 0.0)});
    } else if (family == "cosine") {
        phi = LPDescriptor(Cosine{j.value("a", 1.0), j.value("b", 0.0)});
    } else if (family == "sine") {
        phi = LPDescriptor(Sine{j.value("a", 1.0), j.value("b", 0.0)});
    } else if (family == "product") {
        Product prod;
        if (j.contains("factors"))
            for (const Json& f : j.at("factors")) prod.factors.push_back(descriptor_from_json(f));
        phi = LPDescriptor(std::move(prod));
    } else {
        throw std::invalid_argument("descriptor: unknown family \"" + family + "\"");
    }

    if (j.contains("declared_order") || j.contains("declared_type") || j.contains("genus")) {
        const double order = j.value("declared_order", phi.declared_order());
        const GrowthType type = j.contains("declared_type")
                                    ? growth_from_json(j.at("declared_type"))
                                    : phi.declared_type();
        const int genus = j.value("genus", phi.genus());
        phi.set_declared(order, type, genus);
    }
    return phi;
}

std::string descriptor_id(const LPDescriptor& phi) {
    const std::string dump = descriptor_to_json(phi).dump();
    std::uint64_t h = 1469598103934665603ULL;
    for (unsigned char c : dump) {
        h ^= c;
        h *= 1099511628211ULL;
    }
    static const char* hex = "0123456789abcdef";
    std::string out(16, '0');
    for (int k = 15; k >= 0; --k) {
        out[static_cast<std::size_t>(k)] = hex[h & 0xF];
        h >>= 4;
    }
    return out;
}

Json rootset_to_json(const RootSet& rs) {
    Json roots = Json::array();
    for (const Complex& x : rs.roots) roots.push_back(complex_to_json(x));
    Json pairing = Json::array();
    for (const auto& [i, k] : rs.pairing) pairing.push_back(Json::array({i, k}));
    Json j;
    j["roots"] = std::move(roots);
    j["pairing"] = std::move(pairing);
    j["residuals"] = rs.residuals;
    return j;
}

Json strip_to_json(const StripReport& report) {
    Json j;
    j["half_width"] = report.half_width;
    j["n_real"] = report.n_real;
    j["n_complex"] = report.n_complex;
    j["tolerance_used"] = report.tolerance_used;
    return j;
}

Json r1_to_json(const R1Result& result) {
    Json j;
    j["case"] = case_name(result.root_case);
    j["r1"] = result.r1;
    j["ratio_log"] = result.ratio_log;
    j["real_offset"] = result.real_offset;
    return j;
}

Json curve_to_json(const std::vector<R1CurvePoint>& curve) {
    Json j = Json::array();
    for (const R1CurvePoint& point : curve) {
        Json entry;
        entry["a"] = point.a;
        entry["result"] = r1_to_json(point.result);
        entry["lower_bound"] = point.lower_bound;
        j.push_back(std::move(entry));
    }
    return j;
}

Json sweep_to_json(const CPhiEstimate& estimate) {
    Json records = Json::array();
    for (const SweepRecord& rec : estimate.records) records.push_back(record_to_json(rec));
    Json j;
    j["c_hat"] = estimate.c_hat;
    j["no_shrink"] = estimate.no_shrink;
    j["n_failed"] = estimate.n_failed;
    j["records"] = std::move(records);
    return j;
}

Json density_to_json(const DensityReport& report) {
    Json j;
    j["t_grid"] = report.t_grid;
    j["n_of_t"] = report.n_of_t;
    j["liminf_proxy"] = report.liminf_proxy;
    return j;
}

std::string sweep_to_csv(const std::vector<SweepRecord>& records) {
    std::string out = "phi_id,a,r,measured_rprime,bound_lower,bound_upper_c,n_samples,seed\n";
    for (const SweepRecord& rec : records) {
        out += rec.phi_id;
        out += ',';
        out += num_str(rec.a);
        out += ',';
        out += num_str(rec.r);
        out += ',';
        out += num_str(rec.measured_rprime);
        out += ',';
        out += num_str(rec.bound_lower);
        out += ',';
        out += num_str(rec.bound_upper_c);
        out += ',';
        out += std::to_string(rec.n_samples);
        out += ',';
        out += std::to_string(rec.seed);
        out += '\n';
    }
    return out;
}

std::string density_to_csv(const DensityReport& report) {
    std::string out = "t,n\n";
    for (std::size_t k = 0; k < report.t_grid.size(); ++k) {
        out += num_str(report.t_grid[k]);
        out += ',';
        out += std::to_string(report.n_of_t[k]);
        out += '\n';
    }
    return out;
}

Json envelope(const std::string& command, Json params, Json result) {
    Json j;
    j["version"] = kVersion;
    j["command"] = command;
    j["params"] = std::move(params);
    j["result"] = std::move(result);
    return j;
}

}  // namespace zstrip
