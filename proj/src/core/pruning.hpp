#pragma once

#include "core/shift_graph.hpp"

namespace stairprune {

// Closed form for the alpha-pruning: summand l of the result is the
// intersection of all summands reachable from l in the shift graph, shifted
// back up by alpha. The kernel correction of the general construction is zero
// here because shifts of upset summands act injectively.
std::vector<Upset> prune_components(const Module& m, const Rational& alpha);

// prune_components repackaged as a module (summands re-sorted canonically)
Module prune(const Module& m, const Rational& alpha);

struct IterativePruning {
  std::vector<Upset> components;  // aligned with the input summand order
  int iterations = 0;             // refinement steps until the list stopped changing
};

// Independent route to the same object: start from the summand list and
// repeatedly replace component l by the intersection of the current components
// of all one-step out-neighbours of l, until a fixed point; then shift by
// alpha. The fixed point is always reached within r - 1 steps.
IterativePruning prune_iterative_components(const Module& m, const Rational& alpha);
Module prune_iterative(const Module& m, const Rational& alpha);

}  // namespace stairprune
