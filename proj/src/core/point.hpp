#pragma once

#include <vector>

#include "core/rational.hpp"

namespace stairprune {

// A point of R^d with exact rational coordinates, ordered componentwise.
class Point {
 public:
  explicit Point(std::vector<Rational> coords);

  int dim() const { return static_cast<int>(coords_.size()); }
  const Rational& operator[](int i) const { return coords_[static_cast<std::size_t>(i)]; }
  const std::vector<Rational>& coords() const { return coords_; }

  // componentwise partial order
  bool leq(const Point& other) const;

  Point translated(const Rational& delta) const;  // adds delta to every coordinate

 private:
  std::vector<Rational> coords_;
};

Point join(const Point& a, const Point& b);  // componentwise max

bool operator==(const Point& a, const Point& b);
inline bool operator!=(const Point& a, const Point& b) { return !(a == b); }

// total order used for canonical generator lists; unrelated to leq
int lex_compare(const Point& a, const Point& b);
inline bool lex_less(const Point& a, const Point& b) { return lex_compare(a, b) < 0; }

}  // namespace stairprune
