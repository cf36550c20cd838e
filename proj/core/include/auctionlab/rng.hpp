#pragma once

#include <cstdint>
#include <initializer_list>

namespace auctionlab {

// Counter-based pseudo-random numbers. Every draw is a pure function of the
// master seed and an index path such as (trial, buyer, item), so results do
// not depend on evaluation order and are reproducible across platforms.

namespace rng {

constexpr std::uint64_t kGamma = 0x9e3779b97f4a7c15ULL;

inline std::uint64_t mix(std::uint64_t z) {
  z ^= z >> 30;
  z *= 0xbf58476d1ce4e5b9ULL;
  z ^= z >> 27;
  z *= 0x94d049bb133111ebULL;
  z ^= z >> 31;
  return z;
}

inline std::uint64_t derive(std::uint64_t seed, std::initializer_list<std::uint64_t> path) {
  std::uint64_t s = mix(seed + kGamma);
  for (std::uint64_t p : path) {
    s = mix(s ^ (p + kGamma));
  }
  return s;
}

// Uniform in [0, 1) with 53 random bits.
inline double to_unit(std::uint64_t u) {
  return static_cast<double>(u >> 11) * 0x1.0p-53;
}

inline double unit(std::uint64_t seed, std::initializer_list<std::uint64_t> path) {
  return to_unit(derive(seed, path));
}

// Integer in [0, bound) without modulo bias worth caring about at these sizes.
inline std::uint64_t below(std::uint64_t seed, std::initializer_list<std::uint64_t> path,
                           std::uint64_t bound) {
  return static_cast<std::uint64_t>(to_unit(derive(seed, path)) * static_cast<double>(bound));
}

}  // namespace rng

}  // namespace auctionlab
