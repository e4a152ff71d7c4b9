#pragma once

#include "germlab/exact/rational.hpp"

#include <compare>
#include <cstdint>
#include <functional>
#include <string>

namespace germlab {

/// Exact dyadic rational numerator / 2^exponent, kept in canonical form:
/// the exponent is zero or the numerator is odd.
class Dyadic {
 public:
  Dyadic() = default;
  Dyadic(long long n) : num_(n) {}  // NOLINT(google-explicit-constructor)
  explicit Dyadic(Integer n) : num_(std::move(n)) {}

  /// Canonical form of numerator / 2^exponent.
  static Dyadic normalize(Integer numerator, std::int64_t exponent);

  /// 2^k for any integer k.
  static Dyadic pow2(std::int64_t k);

  const Integer& numerator() const { return num_; }
  std::uint32_t exponent() const { return exp_; }

  bool is_zero() const { return num_ == 0; }
  bool is_integer() const { return exp_ == 0; }
  int sign() const { return num_.sign(); }

  /// this * 2^k.
  Dyadic shifted(std::int64_t k) const;

  Integer floor() const;
  Dyadic frac() const { return *this - Dyadic(floor()); }

  Rational to_rational() const;

  friend Dyadic operator+(const Dyadic& a, const Dyadic& b);
  friend Dyadic operator-(const Dyadic& a, const Dyadic& b);
  friend Dyadic operator*(const Dyadic& a, const Dyadic& b);
  Dyadic operator-() const;
  Dyadic& operator+=(const Dyadic& o) { return *this = *this + o; }
  Dyadic& operator-=(const Dyadic& o) { return *this = *this - o; }

  friend bool operator==(const Dyadic& a, const Dyadic& b) {
    return a.exp_ == b.exp_ && a.num_ == b.num_;
  }
  friend std::strong_ordering operator<=>(const Dyadic& a, const Dyadic& b);

  /// "n" or "n/2^k" rendered with the denominator expanded, e.g. "3/8".
  std::string str() const;

  /// Accepts "p/q" with q a power of two, or an integer.
  static Dyadic parse(const std::string& text);

  std::size_t hash() const;

 private:
  Integer num_ = 0;
  std::uint32_t exp_ = 0;
};

/// True iff x has a denominator that is a power of two.
bool is_dyadic(const Rational& x);
Dyadic to_dyadic(const Rational& x);

}  // namespace germlab

template <>
struct std::hash<germlab::Dyadic> {
  std::size_t operator()(const germlab::Dyadic& d) const { return d.hash(); }
};
