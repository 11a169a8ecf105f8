#include "core/digraph.hpp"

#include <deque>

#include "core/errors.hpp"

namespace stairprune {

static std::size_t checked_order(const AdjacencyMatrix& adj) {
  const std::size_t n = adj.size();
  for (const auto& row : adj)
    if (row.size() != n) throw validation_error("adjacency matrix must be square");
  return n;
}

std::vector<std::vector<int>> reachable_sets(const AdjacencyMatrix& adj) {
  const std::size_t n = checked_order(adj);
  std::vector<std::vector<int>> out(n);
  for (std::size_t s = 0; s < n; ++s) {
    std::vector<bool> seen(n, false);
    std::deque<std::size_t> queue{s};
    seen[s] = true;
    while (!queue.empty()) {
      const std::size_t v = queue.front();
      queue.pop_front();
      for (std::size_t w = 0; w < n; ++w)
        if (adj[v][w] && !seen[w]) {
          seen[w] = true;
          queue.push_back(w);
        }
    }
    for (std::size_t v = 0; v < n; ++v)
      if (seen[v]) out[s].push_back(static_cast<int>(v));
  }
  return out;
}

AdjacencyMatrix reflexive_transitive_closure(const AdjacencyMatrix& adj) {
  const std::size_t n = checked_order(adj);
  AdjacencyMatrix closure = adj;
  for (std::size_t v = 0; v < n; ++v) closure[v][v] = true;
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t i = 0; i < n; ++i)
      if (closure[i][k])
        for (std::size_t j = 0; j < n; ++j)
          if (closure[k][j]) closure[i][j] = true;
  return closure;
}

std::optional<int> directed_distance(const AdjacencyMatrix& adj, const std::vector<int>& from,
                                     const std::vector<int>& to) {
  const std::size_t n = checked_order(adj);
  if (from.empty()) throw validation_error("source vertex set must be nonempty");
  auto check_vertex = [n](int v) {
    if (v < 0 || static_cast<std::size_t>(v) >= n) throw validation_error("vertex index out of range");
  };

  // multi-source BFS levels
  std::vector<int> dist(n, -1);
  std::deque<std::size_t> queue;
  for (int v : from) {
    check_vertex(v);
    if (dist[static_cast<std::size_t>(v)] < 0) {
      dist[static_cast<std::size_t>(v)] = 0;
      queue.push_back(static_cast<std::size_t>(v));
    }
  }
  while (!queue.empty()) {
    const std::size_t v = queue.front();
    queue.pop_front();
    for (std::size_t w = 0; w < n; ++w)
      if (adj[v][w] && dist[w] < 0) {
        dist[w] = dist[v] + 1;
        queue.push_back(w);
      }
  }

  int worst = 0;
  for (int v : to) {
    check_vertex(v);
    const int d = dist[static_cast<std::size_t>(v)];
    if (d < 0) return std::nullopt;
    if (d > worst) worst = d;
  }
  return worst;
}

}  // namespace stairprune
