#pragma once

#include <cstdint>
#include <random>
#include <string_view>

namespace stratarg {

/// Uniform integer in [0, n) from a 64-bit engine. Unlike
/// std::uniform_int_distribution the draw sequence is the same on every
/// standard library.
inline std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t n) {
  const std::uint64_t threshold = (0 - n) % n;
  while (true) {
    std::uint64_t x = rng();
    if (x >= threshold) return x % n;
  }
}

/// True with probability `p`, portable across standard libraries.
inline bool bernoulli(std::mt19937_64& rng, double p) {
  if (p <= 0.0) return false;
  if (p >= 1.0) return true;
  // 53 random bits against p.
  double u = static_cast<double>(rng() >> 11) * 0x1.0p-53;
  return u < p;
}

/// FNV-1a, used to fold ids into seeds.
inline std::uint64_t fnv1a(std::string_view text, std::uint64_t h = 0xcbf29ce484222325ULL) {
  for (unsigned char c : text) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

}  // namespace stratarg
