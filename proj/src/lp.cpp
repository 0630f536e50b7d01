#include "zstrip/lp.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace zstrip {

namespace {

constexpr double kLn2 = std::numbers::ln2;

// log(cosh(x)) without overflow.
double logcosh_local(double x) {
    const double ax = std::abs(x);
    return ax - kLn2 + std::log1p(std::exp(-2.0 * ax));
}

void validate_window_order(int K) {
    if (K < 0 || K > kMaxDegree)
        throw std::invalid_argument("taylor window order must be in [0, 512]");
}

// sin/cos of b snapped to exact 0/±1 when b is within 1e-12 of a lattice
// point; used by the parity and imaginary-axis paths which need structural
// decisions, not floating approximations.
struct PhaseClass {
    bool sin_zero;  // b ≡ 0 (mod pi)
    bool cos_zero;  // b ≡ pi/2 (mod pi)
    double cos_b;
    double sin_b;
};

PhaseClass classify_phase(double b) {
    constexpr double tol = 1e-12;
    const double pi = std::numbers::pi;
    const double mod_pi = b - pi * std::round(b / pi);
    const double mod_pi_half = b - pi * (std::round(b / pi - 0.5) + 0.5);
    return {std::abs(mod_pi) <= tol, std::abs(mod_pi_half) <= tol, std::cos(b), std::sin(b)};
}

}  // namespace

LPDescriptor::LPDescriptor() : family_(PolynomialRealRoots{}) { compute_metadata(); }

LPDescriptor::LPDescriptor(Family family) : family_(std::move(family)) {
    std::visit(
        [](const auto& fam) {
            using T = std::decay_t<decltype(fam)>;
            if constexpr (std::is_same_v<T, PolynomialRealRoots>) {
                if (fam.c == 0.0)
                    throw std::invalid_argument("polynomial descriptor: c must be nonzero");
                if (fam.m < 0)
                    throw std::invalid_argument("polynomial descriptor: m must be >= 0");
                for (double r : fam.roots)
                    if (r == 0.0 || !std::isfinite(r))
                        throw std::invalid_argument(
                            "polynomial descriptor: roots must be finite and nonzero "
                            "(use m for a root at the origin)");
                if (fam.m + static_cast<int>(fam.roots.size()) > kMaxDegree)
                    throw std::invalid_argument("polynomial descriptor: degree exceeds cap");
            } else if constexpr (std::is_same_v<T, ExpQuadratic>) {
                if (fam.gamma < 0.0)
                    throw std::invalid_argument("exp_quadratic: gamma must be >= 0");
            } else if constexpr (std::is_same_v<T, Cosine> || std::is_same_v<T, Sine>) {
                if (fam.a <= 0.0)
                    throw std::invalid_argument("cosine/sine: frequency a must be positive");
            }
        },
        family_);
    compute_metadata();
}

LPDescriptor LPDescriptor::one() { return LPDescriptor(PolynomialRealRoots{}); }

LPDescriptor LPDescriptor::gauss(double alpha) {
    return LPDescriptor(ExpQuadratic{alpha * alpha / 2.0});
}

LPDescriptor LPDescriptor::poly_roots(std::vector<double> roots, double c, int m) {
    return LPDescriptor(PolynomialRealRoots{std::move(roots), c, m});
}

LPDescriptor LPDescriptor::product(std::vector<LPDescriptor> factors) {
    return LPDescriptor(Product{std::move(factors)});
}

void LPDescriptor::compute_metadata() {
    std::visit(
        [this](const auto& fam) {
            using T = std::decay_t<decltype(fam)>;
            if constexpr (std::is_same_v<T, PolynomialRealRoots>) {
                order_ = 0.0;
                type_ = GrowthType::not_applicable();
                genus_ = 0;
            } else if constexpr (std::is_same_v<T, ExpLinear>) {
                if (fam.delta != 0.0) {
                    order_ = 1.0;
                    type_ = GrowthType::of(std::abs(fam.delta));
                    genus_ = 1;
                } else {
                    order_ = 0.0;
                    type_ = GrowthType::not_applicable();
                    genus_ = 0;
                }
            } else if constexpr (std::is_same_v<T, ExpQuadratic>) {
                if (fam.gamma > 0.0) {
                    order_ = 2.0;
                    type_ = GrowthType::of(fam.gamma);
                    genus_ = 1;
                } else {
                    order_ = 0.0;
                    type_ = GrowthType::not_applicable();
                    genus_ = 0;
                }
            } else if constexpr (std::is_same_v<T, Cosine> || std::is_same_v<T, Sine>) {
                order_ = 1.0;
                type_ = GrowthType::of(fam.a);
                genus_ = 1;
            } else {
                // Product: order is the max over factors; type adds over the
                // factors attaining that order; genus is the max.
                order_ = 0.0;
                genus_ = 0;
                for (const auto& f : fam.factors) {
                    order_ = std::max(order_, f.declared_order());
                    genus_ = std::max(genus_, f.genus());
                }
                if (order_ == 0.0) {
                    type_ = GrowthType::not_applicable();
                } else {
                    double sum = 0.0;
                    bool any_value = false;
                    for (const auto& f : fam.factors) {
                        if (f.declared_order() != order_) continue;
                        if (f.declared_type().kind == GrowthType::Kind::Value) {
                            sum += f.declared_type().value;
                            any_value = true;
                        }
                    }
                    type_ = any_value ? GrowthType::of(sum) : GrowthType::minimal();
                }
            }
        },
        family_);
}

void LPDescriptor::set_declared(double order, GrowthType type, int genus) {
    if (order < 0.0 || order > 2.0)
        throw std::invalid_argument("declared order must be in [0, 2]");
    if (genus != 0 && genus != 1)
        throw std::invalid_argument("genus must be 0 or 1");
    if (type.kind == GrowthType::Kind::Value && type.value < 0.0)
        throw std::invalid_argument("declared type must be nonnegative");
    order_ = order;
    type_ = type;
    genus_ = genus;
}

LPDescriptor::Parity LPDescriptor::parity() const {
    return std::visit(
        [](const auto& fam) -> Parity {
            using T = std::decay_t<decltype(fam)>;
            if constexpr (std::is_same_v<T, PolynomialRealRoots>) {
                // Roots must pair off as {r, -r} for the product part to be
                // even; z^m then sets the overall parity.
                std::vector<double> pos, neg;
                for (double r : fam.roots)
                    (r > 0 ? pos : neg).push_back(std::abs(r));
                if (pos.size() != neg.size()) return Parity::None;
                std::sort(pos.begin(), pos.end());
                std::sort(neg.begin(), neg.end());
                for (std::size_t i = 0; i < pos.size(); ++i)
                    if (std::abs(pos[i] - neg[i]) > 1e-12 * std::max(1.0, pos[i]))
                        return Parity::None;
                return fam.m % 2 == 0 ? Parity::Even : Parity::Odd;
            } else if constexpr (std::is_same_v<T, ExpLinear>) {
                return fam.delta == 0.0 ? Parity::Even : Parity::None;
            } else if constexpr (std::is_same_v<T, ExpQuadratic>) {
                return Parity::Even;
            } else if constexpr (std::is_same_v<T, Cosine>) {
                const PhaseClass pc = classify_phase(fam.b);
                if (pc.sin_zero) return Parity::Even;
                if (pc.cos_zero) return Parity::Odd;
                return Parity::None;
            } else if constexpr (std::is_same_v<T, Sine>) {
                const PhaseClass pc = classify_phase(fam.b);
                if (pc.sin_zero) return Parity::Odd;
                if (pc.cos_zero) return Parity::Even;
                return Parity::None;
            } else {
                int odd_count = 0;
                for (const auto& f : fam.factors) {
                    switch (f.parity()) {
                        case Parity::Odd: ++odd_count; break;
                        case Parity::Even: break;
                        case Parity::None: return Parity::None;
                    }
                }
                return odd_count % 2 == 0 ? Parity::Even : Parity::Odd;
            }
        },
        family_);
}

Complex LPDescriptor::eval(Complex z) const {
    return std::visit(
        [z](const auto& fam) -> Complex {
            using T = std::decay_t<decltype(fam)>;
            if constexpr (std::is_same_v<T, PolynomialRealRoots>) {
                Complex acc(fam.c);
                for (int k = 0; k < fam.m; ++k) acc *= z;
                for (double r : fam.roots) acc *= (Complex(1.0) - z / r);
                return acc;
            } else if constexpr (std::is_same_v<T, ExpLinear>) {
                return std::exp(fam.delta * z);
            } else if constexpr (std::is_same_v<T, ExpQuadratic>) {
                return std::exp(-fam.gamma * z * z);
            } else if constexpr (std::is_same_v<T, Cosine>) {
                return std::cos(fam.a * z + fam.b);
            } else if constexpr (std::is_same_v<T, Sine>) {
                return std::sin(fam.a * z + fam.b);
            } else {
                Complex acc(1.0);
                for (const auto& f : fam.factors) acc *= f.eval(z);
                return acc;
            }
        },
        family_);
}

double LPDescriptor::log_eval_imag_axis(double t) const {
    return std::visit(
        [t](const auto& fam) -> double {
            using T = std::decay_t<decltype(fam)>;
            if constexpr (std::is_same_v<T, PolynomialRealRoots>) {
                if (fam.m != 0)
                    throw std::domain_error(
                        "log imag-axis eval: zero at the origin makes phi(it) vanish");
                if (fam.c <= 0.0)
                    throw std::domain_error("log imag-axis eval: phi(it) <= 0 (c <= 0)");
                // phi(it) = c * prod over {r,-r} pairs of (1 + t^2/r^2); an
                // unpaired root gives phi a nonzero odd part.
                std::vector<double> pos, neg;
                for (double r : fam.roots)
                    (r > 0 ? pos : neg).push_back(std::abs(r));
                if (pos.size() != neg.size())
                    throw std::domain_error("log imag-axis eval: phi is not even");
                std::sort(pos.begin(), pos.end());
                std::sort(neg.begin(), neg.end());
                double acc = std::log(fam.c);
                for (std::size_t i = 0; i < pos.size(); ++i) {
                    if (std::abs(pos[i] - neg[i]) > 1e-12 * std::max(1.0, pos[i]))
                        throw std::domain_error("log imag-axis eval: phi is not even");
                    const double q = t / pos[i];
                    acc += std::log1p(q * q);
                }
                return acc;
            } else if constexpr (std::is_same_v<T, ExpLinear>) {
                if (fam.delta != 0.0)
                    throw std::domain_error("log imag-axis eval: phi is not even");
                return 0.0;
            } else if constexpr (std::is_same_v<T, ExpQuadratic>) {
                return fam.gamma * t * t;
            } else if constexpr (std::is_same_v<T, Cosine>) {
                const PhaseClass pc = classify_phase(fam.b);
                if (!pc.sin_zero)
                    throw std::domain_error("log imag-axis eval: phi is not even");
                if (pc.cos_b < 0.0)
                    throw std::domain_error("log imag-axis eval: phi(it) < 0");
                return logcosh_local(fam.a * t);
            } else if constexpr (std::is_same_v<T, Sine>) {
                const PhaseClass pc = classify_phase(fam.b);
                if (!pc.cos_zero)
                    throw std::domain_error("log imag-axis eval: phi is not even");
                if (pc.sin_b < 0.0)
                    throw std::domain_error("log imag-axis eval: phi(it) < 0");
                return logcosh_local(fam.a * t);
            } else {
                double acc = 0.0;
                for (const auto& f : fam.factors) acc += f.log_eval_imag_axis(t);
                return acc;
            }
        },
        family_);
}

TaylorWindow LPDescriptor::taylor_window(int K) const {
    validate_window_order(K);
    return std::visit(
        [K](const auto& fam) -> TaylorWindow {
            using T = std::decay_t<decltype(fam)>;
            std::vector<double> w(static_cast<std::size_t>(K) + 1, 0.0);
            if constexpr (std::is_same_v<T, PolynomialRealRoots>) {
                // Exact expansion of c * z^m * prod (1 - z/r).
                std::vector<double> p{fam.c};
                for (double r : fam.roots) {
                    p.push_back(0.0);
                    for (std::size_t j = p.size() - 1; j >= 1; --j)
                        p[j] -= p[j - 1] / r;
                }
                for (std::size_t j = 0; j < p.size(); ++j) {
                    const std::size_t k = j + static_cast<std::size_t>(fam.m);
                    if (k < w.size()) w[k] = p[j];
                }
            } else if constexpr (std::is_same_v<T, ExpLinear>) {
                double term = 1.0;
                w[0] = 1.0;
                for (int k = 1; k <= K; ++k) {
                    term *= fam.delta / k;
                    w[k] = term;
                }
            } else if constexpr (std::is_same_v<T, ExpQuadratic>) {
                double term = 1.0;
                w[0] = 1.0;
                for (int j = 1; 2 * j <= K; ++j) {
                    term *= -fam.gamma / j;
                    w[2 * j] = term;
                }
            } else if constexpr (std::is_same_v<T, Cosine>) {
                // cos(az+b) = cos b * cos(az) - sin b * sin(az)
                const double cb = std::cos(fam.b), sb = std::sin(fam.b);
                double even_term = 1.0, odd_term = fam.a;
                w[0] = cb;
                if (K >= 1) w[1] = -sb * odd_term;
                for (int j = 1; 2 * j <= K; ++j) {
                    even_term *= -fam.a * fam.a / ((2.0 * j) * (2.0 * j - 1.0));
                    w[2 * j] = cb * even_term;
                    if (2 * j + 1 <= K) {
                        odd_term *= -fam.a * fam.a / ((2.0 * j) * (2.0 * j + 1.0));
                        w[2 * j + 1] = -sb * odd_term;
                    }
                }
            } else if constexpr (std::is_same_v<T, Sine>) {
                // sin(az+b) = sin b * cos(az) + cos b * sin(az)
                const double cb = std::cos(fam.b), sb = std::sin(fam.b);
                double even_term = 1.0, odd_term = fam.a;
                w[0] = sb;
                if (K >= 1) w[1] = cb * odd_term;
                for (int j = 1; 2 * j <= K; ++j) {
                    even_term *= -fam.a * fam.a / ((2.0 * j) * (2.0 * j - 1.0));
                    w[2 * j] = sb * even_term;
                    if (2 * j + 1 <= K) {
                        odd_term *= -fam.a * fam.a / ((2.0 * j) * (2.0 * j + 1.0));
                        w[2 * j + 1] = cb * odd_term;
                    }
                }
            } else {
                w[0] = 1.0;
                for (const auto& f : fam.factors) {
                    const TaylorWindow fw = f.taylor_window(K);
                    std::vector<double> conv(w.size(), 0.0);
                    for (std::size_t i = 0; i < w.size(); ++i) {
                        if (w[i] == 0.0) continue;
                        for (std::size_t j = 0; i + j < conv.size(); ++j)
                            conv[i + j] += w[i] * fw.coeffs[j];
                    }
                    w = std::move(conv);
                }
            }
            return TaylorWindow{std::move(w)};
        },
        family_);
}

LPDescriptor LPDescriptor::scaled(double a) const {
    if (a <= 0.0 || !std::isfinite(a))
        throw std::invalid_argument("descriptor scale must be positive and finite");
    LPDescriptor out = std::visit(
        [a](const auto& fam) -> LPDescriptor {
            using T = std::decay_t<decltype(fam)>;
            if constexpr (std::is_same_v<T, PolynomialRealRoots>) {
                PolynomialRealRoots s = fam;
                for (double& r : s.roots) r /= a;
                s.c *= std::pow(a, fam.m);
                return LPDescriptor(s);
            } else if constexpr (std::is_same_v<T, ExpLinear>) {
                return LPDescriptor(ExpLinear{fam.delta * a});
            } else if constexpr (std::is_same_v<T, ExpQuadratic>) {
                return LPDescriptor(ExpQuadratic{fam.gamma * a * a});
            } else if constexpr (std::is_same_v<T, Cosine>) {
                return LPDescriptor(Cosine{fam.a * a, fam.b});
            } else if constexpr (std::is_same_v<T, Sine>) {
                return LPDescriptor(Sine{fam.a * a, fam.b});
            } else {
                Product s;
                s.factors.reserve(fam.factors.size());
                for (const auto& f : fam.factors) s.factors.push_back(f.scaled(a));
                return LPDescriptor(std::move(s));
            }
        },
        family_);
    // Growth type rescales as sigma * a^rho; order and genus are unchanged.
    GrowthType t = type_;
    if (t.kind == GrowthType::Kind::Value) t.value *= std::pow(a, order_);
    out.set_declared(order_, t, genus_);
    return out;
}

}  // namespace zstrip
