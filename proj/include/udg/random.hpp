#pragma once

#include <cstdint>
#include <random>

namespace udg {

using Rng = std::mt19937_64;

// std::uniform_real_distribution is implementation-defined, so seeded runs
// would differ across standard libraries. These helpers are bit-stable.

/// Uniform double in [0, 1).
inline double uniform01(Rng& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

/// Uniform double in [lo, hi).
inline double uniform_in(Rng& rng, double lo, double hi) {
  return lo + (hi - lo) * uniform01(rng);
}

/// Uniform index in [0, n). Modulo bias is immaterial at these ranges.
inline std::size_t uniform_index(Rng& rng, std::size_t n) {
  return static_cast<std::size_t>(rng() % static_cast<std::uint64_t>(n));
}

}  // namespace udg
