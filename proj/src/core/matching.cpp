#include "core/matching.hpp"

namespace stairprune {

namespace {

bool augment(const std::vector<std::vector<bool>>& edge, std::size_t left,
             std::vector<int>& matched_to, std::vector<bool>& visited) {
  for (std::size_t j = 0; j < matched_to.size(); ++j) {
    if (!edge[left][j] || visited[j]) continue;
    visited[j] = true;
    if (matched_to[j] < 0 ||
        augment(edge, static_cast<std::size_t>(matched_to[j]), matched_to, visited)) {
      matched_to[j] = static_cast<int>(left);
      return true;
    }
  }
  return false;
}

}  // namespace

int max_bipartite_matching(const std::vector<std::vector<bool>>& edge) {
  const std::size_t left_size = edge.size();
  const std::size_t right_size = left_size ? edge.front().size() : 0;
  std::vector<int> matched_to(right_size, -1);
  int size = 0;
  for (std::size_t i = 0; i < left_size; ++i) {
    std::vector<bool> visited(right_size, false);
    if (augment(edge, i, matched_to, visited)) ++size;
  }
  return size;
}

bool has_perfect_matching(const std::vector<std::vector<bool>>& edge, int right_size) {
  const int left_size = static_cast<int>(edge.size());
  if (left_size != right_size) return false;
  if (left_size == 0) return true;
  return max_bipartite_matching(edge) == left_size;
}

}  // namespace stairprune
