#pragma once

#include <cmath>
#include <cstdint>
#include <random>

// Reproducibility notes: all randomness in this project flows through
// std::mt19937_64 (its output sequence is fully specified by the standard)
// combined with the hand-rolled draw helpers below. The std <random>
// distributions are deliberately avoided because their outputs are not
// portable across standard library implementations.
namespace esnn::rng {

using engine = std::mt19937_64;

// SplitMix64 finalizer, used to derive independent substream seeds
// (e.g. one per generated video subsequence) from a master seed.
inline std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ull;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
  return x ^ (x >> 31);
}

inline std::uint64_t substream_seed(std::uint64_t master, std::uint64_t index) {
  return splitmix64(master ^ splitmix64(index + 1));
}

// uniform in [0, 1): 53-bit mantissa from the top bits
inline double uniform01(engine& g) {
  return static_cast<double>(g() >> 11) * 0x1.0p-53;
}

// unbiased uniform integer in [0, bound) via rejection
inline std::uint64_t uniform_below(engine& g, std::uint64_t bound) {
  const std::uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
  std::uint64_t v;
  do {
    v = g();
  } while (v >= limit);
  return v % bound;
}

// uniform integer in [lo, hi], inclusive
inline std::int64_t uniform_int(engine& g, std::int64_t lo, std::int64_t hi) {
  return lo + static_cast<std::int64_t>(
                  uniform_below(g, static_cast<std::uint64_t>(hi - lo) + 1));
}

inline std::uint8_t uniform_byte(engine& g) {
  return static_cast<std::uint8_t>(uniform_below(g, 256));
}

inline double uniform_range(engine& g, double lo, double hi) {
  return lo + (hi - lo) * uniform01(g);
}

// standard normal via Box-Muller (polar form avoided to keep the draw
// count per call fixed at two)
inline double normal01(engine& g) {
  double u1 = uniform01(g);
  double u2 = uniform01(g);
  if (u1 <= 0.0) u1 = 0x1.0p-53;
  return std::sqrt(-2.0 * std::log(u1)) * std::cos(6.283185307179586 * u2);
}

}  // namespace esnn::rng
