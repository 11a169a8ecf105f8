#pragma once

#include <string>

#include "core/distances.hpp"
#include "core/module.hpp"

namespace stairprune {

// "n" or "n/d": optional sign on either part, denominator nonzero. The result
// is normalized; the serializer below always emits the canonical reduced form
// with a positive denominator.
Rational parse_rational(const std::string& text);
std::string rational_to_string(const Rational& q);

// Module document: {"dim": d, "summands": [{"generators": [["x", "y"], ...]}, ...]}
// The serializer is canonical (sorted antichains, sorted summands, reduced
// rationals, fixed layout), so isomorphic modules serialize byte-identically.
Module parse_module_json(const std::string& text);
std::string module_to_json(const Module& m);

// Shift graph in DOT form at the given alpha, every edge labeled with its
// threshold. Deterministic output.
std::string graph_to_dot(const Module& m, const Rational& alpha);

// Staircase boundary plot; only dim 2. Everything is clipped to the generator
// bounding box padded by one unit. Deterministic output.
std::string module_to_svg(const Module& m);

// "5/2", "inf", or for a bisection bracket an approximation like
// "≈ 3/2 [1, 2]" carrying the midpoint and the enclosing interval
std::string format_distance(const DistanceResult& r);

}  // namespace stairprune
