#pragma once

#include <cstdint>

namespace stairprune {

// SplitMix64. Pinned here (rather than std::mt19937_64 + distributions) so the
// generated streams are reproducible from the seed alone, independent of any
// standard-library implementation details. The state advances by the constant
// 0x9e3779b97f4a7c15 and the output is the finalized state:
//   z = state += 0x9e3779b97f4a7c15
//   z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9
//   z = (z ^ (z >> 27)) * 0x94d049bb133111eb
//   return z ^ (z >> 31)
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ull);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  }

  // Uniform-ish value in [lo, hi] via next() % span; the modulo bias is
  // negligible for the tiny spans used here and keeps the mapping trivial to
  // reproduce in any language.
  std::int64_t next_in_range(std::int64_t lo, std::int64_t hi) {
    const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1u;
    return lo + static_cast<std::int64_t>(next() % span);
  }

 private:
  std::uint64_t state_;
};

}  // namespace stairprune
