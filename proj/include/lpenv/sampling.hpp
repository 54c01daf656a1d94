#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "lpenv/envelopes.hpp"
#include "lpenv/step_function.hpp"

namespace lpenv {

using Rng = std::mt19937_64;

/// Seed for sub-stream `stream` of a run seeded with `seed` (SplitMix64 mix).
std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t stream);

inline Rng make_rng(std::uint64_t seed, std::uint64_t stream) {
    return Rng(derive_seed(seed, stream));
}

/// Random step function for exponent p: 1..8 atoms at uniform breakpoints,
/// values exp(U[-3, 3]); each atom is replaced with probability 0.1 by 0
/// (p > 0) or +inf (p < 0).
StepFunction random_step_function(Rng& rng, double p);

std::vector<StepFunction> random_family(Rng& rng, double p, std::size_t count);

/// Point of the cone with x + y = scale: uniform position on the
/// cross-section half-disc.
ConeTriple random_triple(Rng& rng, double scale = 2.0);

}  // namespace lpenv
