#include "core/upset.hpp"

#include <algorithm>

#include "core/errors.hpp"

namespace stairprune {

std::vector<Point> antichain_reduce(std::vector<Point> points) {
  if (points.empty()) throw validation_error("generator set must be nonempty");
  const int d = points.front().dim();
  for (const auto& p : points)
    if (p.dim() != d) throw validation_error("generators have mixed dimensions");

  std::sort(points.begin(), points.end(),
            [](const Point& a, const Point& b) { return lex_less(a, b); });
  points.erase(std::unique(points.begin(), points.end()), points.end());

  std::vector<Point> minimal;
  for (std::size_t i = 0; i < points.size(); ++i) {
    bool dominated = false;
    for (std::size_t j = 0; j < points.size() && !dominated; ++j)
      if (j != i && points[j].leq(points[i])) dominated = true;
    if (!dominated) minimal.push_back(points[i]);
  }
  return minimal;  // still lex sorted: filtering preserves order
}

Upset::Upset(std::vector<Point> generators) : dim_(0), gens_(antichain_reduce(std::move(generators))) {
  dim_ = gens_.front().dim();
}

bool Upset::contains(const Point& p) const {
  if (p.dim() != dim_) throw validation_error("point dimension does not match upset");
  for (const auto& g : gens_)
    if (g.leq(p)) return true;
  return false;
}

Upset Upset::shifted(const Rational& eps) const {
  std::vector<Point> out;
  out.reserve(gens_.size());
  for (const auto& g : gens_) out.push_back(g.translated(-eps));
  return Upset(std::move(out));
}

bool subseteq(const Upset& u, const Upset& v) {
  if (u.dim() != v.dim()) throw validation_error("dimension mismatch between upsets");
  for (const auto& g : u.generators())
    if (!v.contains(g)) return false;
  return true;
}

Rational minshift(const Upset& u, const Upset& v) {
  if (u.dim() != v.dim()) throw validation_error("dimension mismatch between upsets");
  bool first_g = true;
  Rational worst;
  for (const auto& g : u.generators()) {
    // least shift putting this one generator inside v
    bool first_h = true;
    Rational best;
    for (const auto& h : v.generators()) {
      Rational need = h[0] - g[0];
      for (int i = 1; i < u.dim(); ++i) {
        Rational c = h[i] - g[i];
        if (c > need) need = c;
      }
      if (first_h || need < best) {
        best = need;
        first_h = false;
      }
    }
    if (first_g || best > worst) {
      worst = best;
      first_g = false;
    }
  }
  return worst;
}

Upset intersect(const Upset& u, const Upset& v) {
  if (u.dim() != v.dim()) throw validation_error("dimension mismatch between upsets");
  std::vector<Point> joins;
  joins.reserve(u.generators().size() * v.generators().size());
  for (const auto& g : u.generators())
    for (const auto& h : v.generators()) joins.push_back(join(g, h));
  return Upset(std::move(joins));
}

bool operator==(const Upset& a, const Upset& b) {
  return a.dim() == b.dim() && a.generators() == b.generators();
}

int lex_compare(const Upset& a, const Upset& b) {
  const auto& ga = a.generators();
  const auto& gb = b.generators();
  const std::size_t n = std::min(ga.size(), gb.size());
  for (std::size_t i = 0; i < n; ++i) {
    int c = lex_compare(ga[i], gb[i]);
    if (c != 0) return c;
  }
  if (ga.size() < gb.size()) return -1;
  if (ga.size() > gb.size()) return 1;
  return 0;
}

}  // namespace stairprune
