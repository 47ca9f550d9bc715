#pragma once

#include <cstdint>

namespace needleboard {

// SplitMix64 output finalizer. Bijective on 64-bit words.
constexpr std::uint64_t mix64(std::uint64_t x) noexcept {
  x ^= x >> 30;
  x *= 0xBF58476D1CE4E5B9ULL;
  x ^= x >> 27;
  x *= 0x94D049BB133111EBULL;
  x ^= x >> 31;
  return x;
}

// Sign of cell (i, j) in the random coloring with the given seed.
constexpr double random_cell_sign(std::uint64_t seed, std::uint64_t i, std::uint64_t j) noexcept {
  const std::uint64_t word = mix64(seed ^ mix64(((i << 32) + j) + 1));
  return (word >> 63) == 0 ? 1.0 : -1.0;
}

/// Counter-based uniform stream: draw k is a pure function of (key, k).
/// Copies are independent and cheap; no state is shared between streams.
class CounterRng {
 public:
  explicit constexpr CounterRng(std::uint64_t key) noexcept : key_(mix64(key ^ 0x6A09E667F3BCC909ULL)) {}

  constexpr std::uint64_t next_u64() noexcept { return mix64(key_ ^ mix64(++counter_)); }

  // Uniform on [0, 1) with 53 random bits.
  constexpr double uniform() noexcept { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

  constexpr double uniform(double lo, double hi) noexcept { return lo + (hi - lo) * uniform(); }

  constexpr std::uint64_t counter() const noexcept { return counter_; }

 private:
  std::uint64_t key_;
  std::uint64_t counter_ = 0;
};

}  // namespace needleboard
