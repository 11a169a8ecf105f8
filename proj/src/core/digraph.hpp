#pragma once

#include <optional>
#include <vector>

namespace stairprune {

// adjacency[i][j] == true means an edge i -> j; vertices are 0-based
using AdjacencyMatrix = std::vector<std::vector<bool>>;

// Reflexively reachable vertex sets, one sorted list per start vertex,
// computed by breadth-first search.
std::vector<std::vector<int>> reachable_sets(const AdjacencyMatrix& adj);

// Same sets via the Warshall all-pairs closure; kept as an independent route
// so the two can be cross-checked.
AdjacencyMatrix reflexive_transitive_closure(const AdjacencyMatrix& adj);

// Directed one-sided distance: max over b in `to` of the shortest path length
// from any vertex of `from` to b. Empty `to` gives 0; an unreachable target
// gives nullopt (infinite). `from` must be nonempty.
std::optional<int> directed_distance(const AdjacencyMatrix& adj, const std::vector<int>& from,
                                     const std::vector<int>& to);

}  // namespace stairprune
