#pragma once

#include <cstdint>
#include <initializer_list>
#include <random>

namespace bfa {

/// SplitMix64 step: advances the state and returns the mixed output.
/// Used as the published seed-mixing function for per-trial seeds.
std::uint64_t splitmix64(std::uint64_t& state);

/// Folds the parts into one seed by chaining splitmix64, so derived seeds
/// are stable across platforms and releases.
std::uint64_t mix_seed(std::initializer_list<std::uint64_t> parts);

/// Unbiased draw in [0, bound) by rejection; avoids the
/// implementation-defined std::uniform_int_distribution.
std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t bound);

/// Uniform double in [0, 1) with 53 random bits.
double uniform_unit(std::mt19937_64& rng);

}  // namespace bfa
