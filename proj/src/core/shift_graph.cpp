#include "core/shift_graph.hpp"

#include <cassert>

#include "core/errors.hpp"

namespace stairprune {

ShiftGraph build_graph(const Module& m, const Rational& alpha) {
  if (alpha < 0) throw validation_error("shift graph needs a nonnegative alpha");
  if (m.is_zero()) throw validation_error("shift graph of the zero module is undefined");

  ShiftGraph g;
  g.r = m.supdim();
  g.alpha = alpha;
  const std::size_t n = static_cast<std::size_t>(g.r);
  const Rational bound = 2 * alpha;

  g.thresholds.assign(n, std::vector<Rational>(n));
  g.adjacency.assign(n, std::vector<bool>(n, false));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      g.thresholds[i][j] = minshift(m.summands()[i], m.summands()[j]);
      g.adjacency[i][j] = g.thresholds[i][j] <= bound;
    }

  g.reach = reachable_sets(g.adjacency);

#ifndef NDEBUG
  // second route through the Warshall closure; the two must agree
  const AdjacencyMatrix closure = reflexive_transitive_closure(g.adjacency);
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<int> via_closure;
    for (std::size_t j = 0; j < n; ++j)
      if (closure[i][j]) via_closure.push_back(static_cast<int>(j));
    assert(via_closure == g.reach[i]);
  }
#endif

  return g;
}

std::optional<int> graph_distance(const ShiftGraph& g, const std::vector<int>& from,
                                  const std::vector<int>& to) {
  return directed_distance(g.adjacency, from, to);
}

}  // namespace stairprune
