#pragma once

#include <string>
#include <vector>

#include "core/module.hpp"

namespace stairprune {

// The family on which the (2r - 1) factor between pruning and bottleneck
// distance is attained exactly: summand i of the first module is generated by
// the diagonal point 2*i*alpha, and every summand of the second by the
// diagonal point (2r + 1)*alpha.
Module sharp_family_m(int r, int dim, const Rational& alpha);
Module sharp_family_n(int r, int dim, const Rational& alpha);

// A 2 + 2 staircase pair whose interleaving constraints form a 4-cycle: maps
// are cheap along the cycle (shift 1) but any invertible matrix pair needs
// shift 3, even though each side 1-shifts into a rearrangement of the other.
std::pair<Module, Module> ci_cycle_instance();

struct CheckResult {
  std::string name;
  bool passed;
};

// Self-contained verification of the engine's headline identities on the
// families above plus seeded random spot checks. Used by the CLI.
std::vector<CheckResult> run_builtin_checks();

}  // namespace stairprune
