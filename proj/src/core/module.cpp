#include "core/module.hpp"

#include <algorithm>

#include "core/errors.hpp"
#include "core/rng.hpp"

namespace stairprune {

Module::Module(int dim, std::vector<Upset> summands) : dim_(dim), summands_(std::move(summands)) {
  if (dim_ < 1) throw validation_error("module dimension must be at least 1");
  for (const auto& s : summands_)
    if (s.dim() != dim_) throw validation_error("summand dimension does not match module");
  std::sort(summands_.begin(), summands_.end(),
            [](const Upset& a, const Upset& b) { return lex_less(a, b); });
}

Module Module::shifted(const Rational& eps) const {
  std::vector<Upset> out;
  out.reserve(summands_.size());
  for (const auto& s : summands_) out.push_back(s.shifted(eps));
  return Module(dim_, std::move(out));
}

bool operator==(const Module& a, const Module& b) {
  return a.dim() == b.dim() && a.summands() == b.summands();
}

bool iso_check(const Module& a, const Module& b) {
  if (a.is_zero() && b.is_zero()) return true;
  if (a.is_zero() || b.is_zero()) return false;
  if (a.dim() != b.dim()) throw validation_error("dimension mismatch between modules");
  // summand lists are canonically sorted, so multiset equality is list equality
  return a.summands() == b.summands();
}

Module random_module(std::uint64_t seed, int r, int dim, int gens_per_summand, int coord_bound) {
  if (r < 0) throw validation_error("summand count must be nonnegative");
  if (dim < 1) throw validation_error("dimension must be at least 1");
  if (gens_per_summand < 1) throw validation_error("need at least one generator per summand");
  if (coord_bound < 0) throw validation_error("coordinate bound must be nonnegative");

  SplitMix64 rng(seed);
  std::vector<Upset> summands;
  summands.reserve(static_cast<std::size_t>(r));
  for (int s = 0; s < r; ++s) {
    std::vector<Point> gens;
    gens.reserve(static_cast<std::size_t>(gens_per_summand));
    for (int g = 0; g < gens_per_summand; ++g) {
      std::vector<Rational> coords;
      coords.reserve(static_cast<std::size_t>(dim));
      for (int c = 0; c < dim; ++c)
        coords.emplace_back(rng.next_in_range(-coord_bound, coord_bound));
      gens.emplace_back(std::move(coords));
    }
    summands.emplace_back(std::move(gens));  // antichain-reduced here
  }
  return Module(dim, std::move(summands));
}

}  // namespace stairprune
