#include "core/pruning.hpp"

#include "core/errors.hpp"

namespace stairprune {

std::vector<Upset> prune_components(const Module& m, const Rational& alpha) {
  if (alpha < 0) throw validation_error("pruning needs a nonnegative alpha");
  if (m.is_zero()) return {};

  const ShiftGraph g = build_graph(m, alpha);
  std::vector<Upset> out;
  out.reserve(static_cast<std::size_t>(g.r));
  for (int l = 0; l < g.r; ++l) {
    const auto& reach = g.reach[static_cast<std::size_t>(l)];
    Upset acc = m.summands()[static_cast<std::size_t>(reach.front())];
    for (std::size_t k = 1; k < reach.size(); ++k)
      acc = intersect(acc, m.summands()[static_cast<std::size_t>(reach[k])]);
    out.push_back(acc.shifted(-alpha));
  }
  return out;
}

Module prune(const Module& m, const Rational& alpha) {
  return Module(m.dim(), prune_components(m, alpha));
}

IterativePruning prune_iterative_components(const Module& m, const Rational& alpha) {
  if (alpha < 0) throw validation_error("pruning needs a nonnegative alpha");
  if (m.is_zero()) return {};

  const ShiftGraph g = build_graph(m, alpha);
  const std::size_t n = static_cast<std::size_t>(g.r);

  std::vector<Upset> current = m.summands();
  int iterations = 0;
  for (;;) {
    std::vector<Upset> next;
    next.reserve(n);
    for (std::size_t l = 0; l < n; ++l) {
      Upset acc = current[l];  // self-edge is always present
      for (std::size_t j = 0; j < n; ++j)
        if (g.adjacency[l][j] && j != l) acc = intersect(acc, current[j]);
      next.push_back(std::move(acc));
    }
    if (next == current) break;
    current = std::move(next);
    ++iterations;
    if (iterations > g.r)
      throw std::logic_error("iterative pruning failed to stabilize");
  }

  IterativePruning result;
  result.iterations = iterations;
  result.components.reserve(n);
  for (const auto& c : current) result.components.push_back(c.shifted(-alpha));
  return result;
}

Module prune_iterative(const Module& m, const Rational& alpha) {
  return Module(m.dim(), prune_iterative_components(m, alpha).components);
}

}  // namespace stairprune
