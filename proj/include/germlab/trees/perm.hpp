#pragma once

#include "germlab/exact/json.hpp"

#include <array>
#include <compare>
#include <cstdint>
#include <string>
#include <vector>

namespace germlab::trees {

inline constexpr int kMaxDegree = 16;

/// Permutation of {0, ..., n-1}, n <= kMaxDegree.
class Perm {
 public:
  Perm() = default;  // the empty permutation (n = 0)
  /// Throws PreconditionError unless `images` is a bijection.
  explicit Perm(const std::vector<int>& images);
  static Perm identity(int n);
  /// 0 -> 1 -> ... -> n-1 -> 0.
  static Perm cycle(int n);
  /// Cycle notation such as "(0 1 2)(3 4)", on n points.
  static Perm parse_cycles(const std::string& s, int n);

  int size() const { return n_; }
  int operator()(int x) const { return img_[static_cast<std::size_t>(x)]; }
  std::vector<int> images() const;
  bool is_identity() const;
  bool is_even() const;
  std::string str() const;  // cycle notation, "()" for the identity

  /// (p * q)(x) = p(q(x)).
  friend Perm operator*(const Perm& p, const Perm& q);
  friend Perm inverse(const Perm& p);

  friend bool operator==(const Perm&, const Perm&) = default;
  friend auto operator<=>(const Perm&, const Perm&) = default;

 private:
  std::uint8_t n_ = 0;
  std::array<std::uint8_t, kMaxDegree> img_{};
};

/// Image list [p(0), ..., p(n-1)].
Json to_json(const Perm& p);
Perm perm_from_json(const Json& j, int n);

/// All permutations of n points generated by `gens`, sorted.
std::vector<Perm> generated_group(const std::vector<Perm>& gens, int n);
std::vector<Perm> symmetric_group(int n);
std::vector<Perm> alternating_group(int n);

/// F <= F' <= Sym(n) as sorted element lists, with F acting freely and
/// transitively (|F| = n).
class PermGroupPair {
 public:
  /// Closes both lists under products, then checks regularity of F and
  /// F <= F'. Throws PreconditionError on failure.
  static PermGroupPair make(const std::vector<Perm>& F, const std::vector<Perm>& Fprime, int n);
  /// F = <(0 1 ... n-1)>, F' = Alt(n). Needs n odd so the cycle is even.
  static PermGroupPair cycle_alt(int n);
  /// F = <(0 1 ... n-1)>, F' = Sym(n).
  static PermGroupPair cycle_sym(int n);

  int degree() const { return n_; }
  const std::vector<Perm>& F() const { return F_; }
  const std::vector<Perm>& Fprime() const { return Fp_; }
  bool in_F(const Perm& p) const;
  bool in_Fprime(const Perm& p) const;
  /// The unique f in F with f(a) = b.
  const Perm& f_match(int a, int b) const { return F_[match_[static_cast<std::size_t>(a * n_ + b)]]; }
  bool fprime_two_transitive() const;

  friend bool operator==(const PermGroupPair& x, const PermGroupPair& y) { return x.F_ == y.F_ && x.Fp_ == y.Fp_; }

 private:
  int n_ = 0;
  std::vector<Perm> F_, Fp_;
  std::vector<std::size_t> match_;
};

}  // namespace germlab::trees
