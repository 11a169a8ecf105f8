#include "core/ci.hpp"

#include <algorithm>

#include "core/errors.hpp"

namespace stairprune {

std::pair<Pattern, Pattern> interleaving_patterns(const Module& m, const Module& n,
                                                  const Rational& eps) {
  if (m.is_zero() || n.is_zero()) throw validation_error("patterns need nonzero modules");
  if (m.dim() != n.dim()) throw validation_error("dimension mismatch between modules");
  const std::size_t rm = static_cast<std::size_t>(m.supdim());
  const std::size_t rn = static_cast<std::size_t>(n.supdim());

  Pattern forward{eps, std::vector<std::vector<bool>>(rm, std::vector<bool>(rn, false))};
  Pattern backward{eps, std::vector<std::vector<bool>>(rn, std::vector<bool>(rm, false))};
  for (std::size_t l = 0; l < rm; ++l)
    for (std::size_t s = 0; s < rn; ++s) {
      forward.allowed[l][s] = minshift(m.summands()[l], n.summands()[s]) <= eps;
      backward.allowed[s][l] = minshift(n.summands()[s], m.summands()[l]) <= eps;
    }
  return {forward, backward};
}

namespace {

int field_order(Field f) { return f == Field::f2 ? 2 : 3; }

// Gauss-Jordan inverse of an n x n matrix over F_p; returns false if singular.
bool invert_mod_p(std::vector<std::vector<int>> a, int p, std::vector<std::vector<int>>& inv) {
  const std::size_t n = a.size();
  inv.assign(n, std::vector<int>(n, 0));
  for (std::size_t i = 0; i < n; ++i) inv[i][i] = 1;
  const int inverse_of[3] = {0, 1, 2};  // unit inverses for p in {2, 3}; 2*2 = 4 = 1 mod 3

  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && a[pivot][col] == 0) ++pivot;
    if (pivot == n) return false;
    std::swap(a[pivot], a[col]);
    std::swap(inv[pivot], inv[col]);

    const int scale = inverse_of[a[col][col]];
    for (std::size_t j = 0; j < n; ++j) {
      a[col][j] = a[col][j] * scale % p;
      inv[col][j] = inv[col][j] * scale % p;
    }
    for (std::size_t row = 0; row < n; ++row) {
      if (row == col || a[row][col] == 0) continue;
      const int factor = a[row][col];
      for (std::size_t j = 0; j < n; ++j) {
        a[row][j] = (a[row][j] - factor * a[col][j] % p + p) % p;
        inv[row][j] = (inv[row][j] - factor * inv[col][j] % p + p) % p;
      }
    }
  }
  return true;
}

bool supported_on(const std::vector<std::vector<int>>& x, const Pattern& pattern) {
  for (std::size_t i = 0; i < x.size(); ++i)
    for (std::size_t j = 0; j < x[i].size(); ++j)
      if (x[i][j] != 0 && !pattern.allowed[i][j]) return false;
  return true;
}

}  // namespace

bool ci_solvable(const Pattern& forward, const Pattern& backward, Field field, int size_cap) {
  const std::size_t n = forward.allowed.size();
  if (n == 0) return true;  // empty matrix is its own inverse
  for (const Pattern* p : {&forward, &backward}) {
    if (p->allowed.size() != n) throw validation_error("patterns must be square and equal-sized");
    for (const auto& row : p->allowed)
      if (row.size() != n) throw validation_error("patterns must be square and equal-sized");
  }
  if (static_cast<int>(n) > size_cap) throw validation_error("pattern size exceeds the cap");

  // a zero row or column on either side forces singularity
  for (std::size_t i = 0; i < n; ++i) {
    bool fr = false, fc = false, br = false, bc = false;
    for (std::size_t j = 0; j < n; ++j) {
      fr = fr || forward.allowed[i][j];
      fc = fc || forward.allowed[j][i];
      br = br || backward.allowed[i][j];
      bc = bc || backward.allowed[j][i];
    }
    if (!fr || !fc || !br || !bc) return false;
  }

  std::vector<std::pair<std::size_t, std::size_t>> cells;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (forward.allowed[i][j]) cells.emplace_back(i, j);

  const int p = field_order(field);
  std::vector<int> assignment(cells.size(), 0);
  std::vector<std::vector<int>> x(n, std::vector<int>(n, 0));
  std::vector<std::vector<int>> inv;

  // odometer over all field assignments to the allowed cells
  for (;;) {
    for (std::size_t k = 0; k < cells.size(); ++k)
      x[cells[k].first][cells[k].second] = assignment[k];
    if (invert_mod_p(x, p, inv) && supported_on(inv, backward)) return true;

    std::size_t k = 0;
    while (k < assignment.size() && assignment[k] == p - 1) assignment[k++] = 0;
    if (k == assignment.size()) return false;
    ++assignment[k];
  }
}

DistanceResult interleaving_distance_bruteforce(const Module& m, const Module& n, Field field,
                                                int size_cap) {
  if (m.is_zero() && n.is_zero()) return DistanceResult::exact_value(Rational(0));
  if (m.supdim() != n.supdim()) return DistanceResult::infinite();
  if (m.dim() != n.dim()) throw validation_error("dimension mismatch between modules");
  if (m.supdim() > size_cap) throw validation_error("summand count exceeds the cap");

  std::vector<Rational> candidates{Rational(0)};
  for (const auto& a : m.summands())
    for (const auto& b : n.summands()) {
      for (const Rational& v : {minshift(a, b), minshift(b, a)})
        candidates.push_back(v > 0 ? v : Rational(0));
    }
  std::sort(candidates.begin(), candidates.end());
  candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());

  for (const auto& eps : candidates) {
    const auto [forward, backward] = interleaving_patterns(m, n, eps);
    if (ci_solvable(forward, backward, field, size_cap))
      return DistanceResult::exact_value(eps);
  }
  throw std::logic_error("interleaving search exhausted its candidates");  // unreachable
}

}  // namespace stairprune
