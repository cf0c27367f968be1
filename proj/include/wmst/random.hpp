#pragma once

#include <cstdint>
#include <random>
#include <span>

#include "wmst/graph.hpp"
#include "wmst/online.hpp"

namespace wmst {

/// All randomness in the library comes from a seeded 64-bit Mersenne
/// Twister. Bounded draws use rejection sampling on the raw output instead of
/// std::uniform_int_distribution, whose algorithm varies between standard
/// libraries, so seeds reproduce across toolchains.
using Rng = std::mt19937_64;

/// Uniform integer in [0, bound). bound must be positive.
std::uint64_t uniform_below(Rng& rng, std::uint64_t bound);

/// SplitMix64 finalizer over (seed, stream); used to derive independent
/// per-chunk generator seeds.
std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t stream);

/// Fisher-Yates.
void shuffle(std::span<EdgeId> items, Rng& rng);

ArrivalOrder random_order(std::size_t m, Rng& rng);

}  // namespace wmst
