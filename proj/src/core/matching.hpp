#pragma once

#include <vector>

namespace stairprune {

// Maximum bipartite matching (augmenting paths); edge[i][j] links left i to
// right j. Returns the matching size.
int max_bipartite_matching(const std::vector<std::vector<bool>>& edge);

// true when every left vertex can be matched to a distinct right vertex and
// the two sides have equal size
bool has_perfect_matching(const std::vector<std::vector<bool>>& edge, int right_size);

}  // namespace stairprune
