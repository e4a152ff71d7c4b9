#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace germlab {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline Integer floor_div(const Integer& a, const Integer& b) {
  Integer q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

inline Integer floor(const Rational& x) {
  return floor_div(boost::multiprecision::numerator(x), boost::multiprecision::denominator(x));
}

inline Rational frac(const Rational& x) { return x - Rational(floor(x)); }

inline int sign(const Rational& x) { return x.sign(); }

/// "p/q" or "p" when the denominator is one.
std::string to_string(const Rational& x);

/// Accepts "p", "-p", "p/q".
Rational parse_rational(const std::string& text);

}  // namespace germlab
