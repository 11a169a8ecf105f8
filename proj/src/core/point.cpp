#include "core/point.hpp"

#include "core/errors.hpp"

namespace stairprune {

Point::Point(std::vector<Rational> coords) : coords_(std::move(coords)) {
  if (coords_.empty()) throw validation_error("point must have at least one coordinate");
}

static void check_same_dim(const Point& a, const Point& b) {
  if (a.dim() != b.dim()) throw validation_error("dimension mismatch between points");
}

bool Point::leq(const Point& other) const {
  check_same_dim(*this, other);
  for (int i = 0; i < dim(); ++i)
    if (coords_[static_cast<std::size_t>(i)] > other[i]) return false;
  return true;
}

Point Point::translated(const Rational& delta) const {
  std::vector<Rational> out = coords_;
  for (auto& c : out) c += delta;
  return Point(std::move(out));
}

Point join(const Point& a, const Point& b) {
  check_same_dim(a, b);
  std::vector<Rational> out;
  out.reserve(static_cast<std::size_t>(a.dim()));
  for (int i = 0; i < a.dim(); ++i) out.push_back(a[i] > b[i] ? a[i] : b[i]);
  return Point(std::move(out));
}

bool operator==(const Point& a, const Point& b) {
  return a.dim() == b.dim() && a.coords() == b.coords();
}

int lex_compare(const Point& a, const Point& b) {
  check_same_dim(a, b);
  for (int i = 0; i < a.dim(); ++i) {
    if (a[i] < b[i]) return -1;
    if (a[i] > b[i]) return 1;
  }
  return 0;
}

}  // namespace stairprune
