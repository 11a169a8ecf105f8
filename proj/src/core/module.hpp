#pragma once

#include <cstdint>
#include <vector>

#include "core/upset.hpp"

namespace stairprune {

// Direct sum of staircase upset summands over R^d. The summand list is kept in
// a canonical sorted order; all semantics are multiset semantics, so every
// distance defined on modules is invariant under permuting summands.
class Module {
 public:
  Module(int dim, std::vector<Upset> summands);  // validates and sorts

  int dim() const { return dim_; }
  const std::vector<Upset>& summands() const { return summands_; }
  int supdim() const { return static_cast<int>(summands_.size()); }
  bool is_zero() const { return summands_.empty(); }

  Module shifted(const Rational& eps) const;  // shifts every summand

 private:
  int dim_;
  std::vector<Upset> summands_;
};

bool operator==(const Module& a, const Module& b);
inline bool operator!=(const Module& a, const Module& b) { return !(a == b); }

// Isomorphism of upset-decomposable modules: equal summand multisets. Two zero
// modules are isomorphic regardless of ambient dimension; a dimension mismatch
// between two nonzero modules is an error.
bool iso_check(const Module& a, const Module& b);

// Deterministic random module: r summands, each drawn as gens_per_summand
// integer points uniform in [-coord_bound, coord_bound]^dim and then
// antichain-reduced. Coordinates are consumed from a single SplitMix64 stream
// seeded with `seed`, in summand-major, generator-major, coordinate-minor
// order, so equal parameters always produce the identical module.
Module random_module(std::uint64_t seed, int r, int dim, int gens_per_summand, int coord_bound);

}  // namespace stairprune
