#include <cmath>
#include <stdexcept>

#include "zstrip/ensemble.hpp"

namespace zstrip {

std::vector<ComplexPolynomial> generate_ensemble(const EnsembleSpec& spec) {
    if (spec.count < 1) throw std::invalid_argument("ensemble: count must be positive");
    if (spec.degree < 1 || spec.degree > kMaxDegree)
        throw std::invalid_argument("ensemble: degree out of range");
    if (!(spec.r > 0.0)) throw std::invalid_argument("ensemble: r must be positive");
    if (!(spec.real_fraction >= 0.0) || !(spec.real_fraction <= 1.0))
        throw std::invalid_argument("ensemble: real_fraction must lie in [0, 1]");
    if (spec.real_fraction < 1.0 && spec.degree % 2 != 0)
        throw std::invalid_argument(
            "ensemble: degree must be even unless every root is real");

    std::vector<ComplexPolynomial> out;
    out.reserve(static_cast<std::size_t>(spec.count));
    out.push_back(ComplexPolynomial({Complex(spec.r * spec.r), Complex(0.0), Complex(1.0)}));

    const SplitRng rng(spec.seed);
    for (int member = 1; member < spec.count; ++member) {
        int n_real = spec.real_fraction >= 1.0
                         ? spec.degree
                         : static_cast<int>(std::lround(spec.degree * spec.real_fraction));
        n_real = std::min(std::max(n_real, 0), spec.degree);
        if ((spec.degree - n_real) % 2 != 0) ++n_real;
        const int n_pairs = (spec.degree - n_real) / 2;

        const auto stream = static_cast<std::uint64_t>(member);
        std::uint64_t counter = 0;
        std::vector<ComplexPolynomial> factors;
        factors.reserve(static_cast<std::size_t>(n_real + n_pairs));
        for (int k = 0; k < n_real; ++k) {
            const double x = rng.uniform(stream, counter++, -5.0, 5.0);
            factors.push_back(ComplexPolynomial({Complex(-x), Complex(1.0)}));
        }
        for (int k = 0; k < n_pairs; ++k) {
            const double re = rng.uniform(stream, counter++, -5.0, 5.0);
            const double im =
                k == 0 ? spec.r : spec.r * (1.0 - rng.uniform(stream, counter++));
            factors.push_back(ComplexPolynomial(
                {Complex(re * re + im * im), Complex(-2.0 * re), Complex(1.0)}));
        }
        out.push_back(balanced_product(factors));
    }
    return out;
}

}  // namespace zstrip
