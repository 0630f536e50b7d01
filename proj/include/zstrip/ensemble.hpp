#pragma once

#include <cstdint>
#include <vector>

#include "zstrip/poly.hpp"

namespace zstrip {

// Recipe for a deterministic batch of strip-rooted test polynomials.
struct EnsembleSpec {
    int count = 1;
    int degree = 2;
    double r = 1.0;
    std::uint64_t seed = 0;
    double real_fraction = 0.0;
};

// Counter-based splittable generator: every draw is keyed by (seed, stream,
// counter), so the sequence is identical on any platform and any draw order.
class SplitRng {
  public:
    explicit SplitRng(std::uint64_t seed) : seed_(seed) {}

    std::uint64_t bits(std::uint64_t stream, std::uint64_t counter) const {
        std::uint64_t x = seed_;
        x = mix(x ^ (0x9E3779B97F4A7C15ULL * (stream + 0x632BE59BD9B4E019ULL)));
        x = mix(x ^ (0xBF58476D1CE4E5B9ULL * (counter + 0xD6E8FEB86659FD93ULL)));
        return x;
    }

    // Uniform in [0, 1).
    double uniform(std::uint64_t stream, std::uint64_t counter) const {
        return static_cast<double>(bits(stream, counter) >> 11) * 0x1.0p-53;
    }

    // Uniform in [lo, hi).
    double uniform(std::uint64_t stream, std::uint64_t counter, double lo, double hi) const {
        return lo + (hi - lo) * uniform(stream, counter);
    }

  private:
    static std::uint64_t mix(std::uint64_t x) {
        x ^= x >> 30;
        x *= 0xBF58476D1CE4E5B9ULL;
        x ^= x >> 27;
        x *= 0x94D049BB133111EBULL;
        x ^= x >> 31;
        return x;
    }

    std::uint64_t seed_;
};

// Monic real polynomials with all roots in the closed strip |Im z| <= r.
// Member 0 is always the boundary quadratic z^2 + r^2 (the witness that makes
// the lower sandwich bound observable); members 1..count-1 draw real roots
// uniformly on [-5, 5] and conjugate pairs with Re in [-5, 5], Im in (0, r],
// with each member's first pair pinned to Im = r.
std::vector<ComplexPolynomial> generate_ensemble(const EnsembleSpec& spec);

}  // namespace zstrip
