#pragma once

#include "core/distances.hpp"
#include "core/module.hpp"

namespace stairprune {

enum class Field { f2, f3 };

// Support constraint for one direction of a candidate interleaving: cell (l, s)
// may carry a nonzero scalar only when summand l fits inside the eps-shift of
// summand s on the other side.
struct Pattern {
  Rational eps;
  std::vector<std::vector<bool>> allowed;  // square, indexed [from][to]
};

// forward.allowed[l][s]: summand l of m inside eps-shift of summand s of n;
// backward.allowed[s][l]: summand s of n inside eps-shift of summand l of m
std::pair<Pattern, Pattern> interleaving_patterns(const Module& m, const Module& n,
                                                  const Rational& eps);

// Is there a matrix over the field, supported on `forward`, that is invertible
// with its inverse supported on `backward`? Exhaustive enumeration; the square
// size is capped (default 4) because the search space is field_size^(r*r).
bool ci_solvable(const Pattern& forward, const Pattern& backward, Field field, int size_cap = 4);

// Smallest eps admitting such a matrix pair. The patterns only change at the
// finitely many pairwise minshift values and solvability is monotone in eps,
// so scanning those candidates upward finds the exact optimum.
DistanceResult interleaving_distance_bruteforce(const Module& m, const Module& n, Field field,
                                                int size_cap = 4);

}  // namespace stairprune
