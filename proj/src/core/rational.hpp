#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace stairprune {

// Exact arithmetic everywhere; nothing in the engine ever rounds.
using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline BigInt rational_num(const Rational& q) { return boost::multiprecision::numerator(q); }
inline BigInt rational_den(const Rational& q) { return boost::multiprecision::denominator(q); }

}  // namespace stairprune
