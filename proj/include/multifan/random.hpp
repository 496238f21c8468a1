#pragma once

#include <cstdint>
#include <random>

namespace multifan {

using Rng = std::mt19937_64;

/// Seed used whenever the caller does not supply one.
inline constexpr std::uint64_t kDefaultSeed = 20010101;

/// Retry budget for every randomized genericity search.
inline constexpr int kGenericRetries = 64;

} // namespace multifan
