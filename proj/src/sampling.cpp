#include "lpenv/sampling.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace lpenv {

std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t stream) {
    std::uint64_t z = seed + 0x9E3779B97F4A7C15ULL * (stream + 1);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

StepFunction random_step_function(Rng& rng, double p) {
    std::uniform_int_distribution<int> atoms_dist(1, 8);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    std::uniform_real_distribution<double> log_value(-3.0, 3.0);

    const int atoms = atoms_dist(rng);
    std::vector<double> breakpoints{0.0, 1.0};
    while (static_cast<int>(breakpoints.size()) < atoms + 1) {
        const double t = unit(rng);
        if (t <= 0.0 || std::find(breakpoints.begin(), breakpoints.end(), t) != breakpoints.end()) continue;
        breakpoints.push_back(t);
    }
    std::sort(breakpoints.begin(), breakpoints.end());

    const double planted = p > 0.0 ? 0.0 : std::numeric_limits<double>::infinity();
    std::vector<double> values;
    values.reserve(atoms);
    for (int i = 0; i < atoms; ++i) {
        const double v = std::exp(log_value(rng));
        values.push_back(unit(rng) < 0.1 ? planted : v);
    }
    return StepFunction(std::move(breakpoints), std::move(values));
}

std::vector<StepFunction> random_family(Rng& rng, double p, std::size_t count) {
    std::vector<StepFunction> family;
    family.reserve(count);
    for (std::size_t i = 0; i < count; ++i) family.push_back(random_step_function(rng, p));
    return family;
}

ConeTriple random_triple(Rng& rng, double scale) {
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    double s = 0.0;
    double h = 0.0;
    do {
        s = 2.0 * unit(rng) - 1.0;
        h = unit(rng);
    } while (s * s + h * h > 1.0);
    const double half = 0.5 * scale;
    return ConeTriple::make(half * (1.0 + s), half * (1.0 - s), half * h);
}

}  // namespace lpenv
