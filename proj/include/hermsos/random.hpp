#pragma once

#include <cmath>
#include <cstdint>
#include <numbers>
#include <random>
#include <vector>

#include "hermsos/scalar.hpp"

namespace hermsos {

// std::mt19937_64 output is fully specified; the distributions in <random>
// are not, so the conversions below are spelled out to keep seeded output
// identical across standard libraries.

inline double uniform01(std::mt19937_64& rng) { return static_cast<double>(rng() >> 11) * 0x1.0p-53; }

inline Complex complex_normal(std::mt19937_64& rng) {
  double u = uniform01(rng);
  while (u <= 0.0) u = uniform01(rng);
  const double v = uniform01(rng);
  const double r = std::sqrt(-2.0 * std::log(u));
  return {r * std::cos(2.0 * std::numbers::pi * v), r * std::sin(2.0 * std::numbers::pi * v)};
}

/// Uniform point on the unit sphere of C^n.
inline std::vector<Complex> sphere_point(std::mt19937_64& rng, int n) {
  std::vector<Complex> z(static_cast<std::size_t>(n));
  double norm2 = 0.0;
  for (auto& c : z) {
    c = complex_normal(rng);
    norm2 += std::norm(c);
  }
  const double inv = 1.0 / std::sqrt(norm2);
  for (auto& c : z) c *= inv;
  return z;
}

/// Stream for block b of a run seeded with `seed`.
inline std::mt19937_64 block_rng(std::uint64_t seed, std::uint64_t block) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(block), static_cast<std::uint32_t>(block >> 32)};
  return std::mt19937_64(seq);
}

}  // namespace hermsos
