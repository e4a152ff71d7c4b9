#pragma once

#include "germlab/exact/rational.hpp"

#include <compare>
#include <string>

namespace germlab {

/// Element a + b*sqrt(2) of the real quadratic field Q(sqrt 2).
///
/// Order is decided by an integer sign analysis; no approximation of sqrt(2)
/// is ever used.
class QuadExt {
 public:
  QuadExt() = default;
  QuadExt(long long a) : a_(a) {}  // NOLINT(google-explicit-constructor)
  QuadExt(Rational a) : a_(std::move(a)) {}  // NOLINT(google-explicit-constructor)
  QuadExt(Rational a, Rational b) : a_(std::move(a)), b_(std::move(b)) {}

  static QuadExt sqrt2() { return {Rational(0), Rational(1)}; }

  const Rational& a() const { return a_; }
  const Rational& b() const { return b_; }

  bool is_zero() const { return a_ == 0 && b_ == 0; }
  bool is_rational() const { return b_ == 0; }

  /// -1, 0 or 1.
  int sign() const;

  /// Field norm a^2 - 2 b^2.
  Rational norm() const { return a_ * a_ - 2 * b_ * b_; }
  QuadExt conjugate() const { return {a_, -b_}; }

  /// Throws DomainError on zero.
  QuadExt inverse() const;

  friend QuadExt operator+(const QuadExt& x, const QuadExt& y) { return {x.a_ + y.a_, x.b_ + y.b_}; }
  friend QuadExt operator-(const QuadExt& x, const QuadExt& y) { return {x.a_ - y.a_, x.b_ - y.b_}; }
  friend QuadExt operator*(const QuadExt& x, const QuadExt& y) {
    return {x.a_ * y.a_ + 2 * x.b_ * y.b_, x.a_ * y.b_ + x.b_ * y.a_};
  }
  friend QuadExt operator/(const QuadExt& x, const QuadExt& y) { return x * y.inverse(); }
  QuadExt operator-() const { return {-a_, -b_}; }

  friend bool operator==(const QuadExt& x, const QuadExt& y) { return x.a_ == y.a_ && x.b_ == y.b_; }
  friend std::strong_ordering operator<=>(const QuadExt& x, const QuadExt& y) {
    const int s = (x - y).sign();
    return s < 0 ? std::strong_ordering::less
                 : (s > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

  /// "a", "a+b*r2" style rendering for messages and map keys.
  std::string str() const;
  /// Inverse of str(): "p/q", "p/q*r2", "p/q+p/q*r2" or "p/q-p/q*r2".
  static QuadExt parse(const std::string& text);

 private:
  Rational a_ = 0;
  Rational b_ = 0;
};

}  // namespace germlab
