#pragma once

#include "core/digraph.hpp"
#include "core/module.hpp"

namespace stairprune {

// The shift graph of a module at scale alpha: one vertex per summand, an edge
// i -> j whenever summand i is contained in the 2*alpha shift of summand j,
// i.e. thresholds[i][j] <= 2*alpha (closed comparison). Self-edges are always
// present because every threshold on the diagonal is zero.
struct ShiftGraph {
  int r = 0;
  Rational alpha;
  std::vector<std::vector<Rational>> thresholds;  // minshift(summand i, summand j)
  AdjacencyMatrix adjacency;
  std::vector<std::vector<int>> reach;  // sorted reflexive reachability per vertex
};

// alpha must be nonnegative and the module nonzero.
ShiftGraph build_graph(const Module& m, const Rational& alpha);

// max over b in `to` of the shortest edge-path length from `from` to b
std::optional<int> graph_distance(const ShiftGraph& g, const std::vector<int>& from,
                                  const std::vector<int>& to);

}  // namespace stairprune
