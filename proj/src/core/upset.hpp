#pragma once

#include <vector>

#include "core/point.hpp"

namespace stairprune {

// Finitely generated closed staircase upset of R^d: the set of points lying
// above at least one generator. Stored canonically as the antichain of minimal
// generators in lexicographic order, so value equality is structural equality.
class Upset {
 public:
  explicit Upset(std::vector<Point> generators);  // canonicalizes; throws if empty or mixed-dim

  int dim() const { return dim_; }
  const std::vector<Point>& generators() const { return gens_; }

  bool contains(const Point& p) const;

  // The eps-shift: support translated by -eps along the diagonal, so every
  // generator moves down by eps in each coordinate. Negative eps moves up.
  Upset shifted(const Rational& eps) const;

 private:
  int dim_;
  std::vector<Point> gens_;
};

// Minimal elements of a nonempty generator set; result is sorted and duplicate-free.
std::vector<Point> antichain_reduce(std::vector<Point> points);

bool subseteq(const Upset& u, const Upset& v);

// Least eps such that u is contained in the eps-shift of v. May be negative
// when u sits strictly inside v. Finite for every pair: a staircase shifted
// far enough down swallows anything.
Rational minshift(const Upset& u, const Upset& v);

// Intersection of two staircase upsets, again a staircase upset. Never empty:
// joins of generators always exist in R^d.
Upset intersect(const Upset& u, const Upset& v);

bool operator==(const Upset& a, const Upset& b);
inline bool operator!=(const Upset& a, const Upset& b) { return !(a == b); }

// total order for canonical summand lists
int lex_compare(const Upset& a, const Upset& b);
inline bool lex_less(const Upset& a, const Upset& b) { return lex_compare(a, b) < 0; }

}  // namespace stairprune
