#pragma once

#include "germlab/exact/json.hpp"
#include "germlab/exact/quad.hpp"

#include <compare>
#include <optional>
#include <vector>

namespace germlab::proj {

/// Point of the projective line over Q(sqrt 2); nullopt is infinity.
using PPoint = std::optional<QuadExt>;

std::string to_string(const PPoint& x);

/// x -> (p x + q) / (r x + s) with ps - qr > 0, scaled so that the first
/// non-zero entry is 1.
class Mobius {
 public:
  Mobius() : Mobius(1, 0, 0, 1) {}
  Mobius(QuadExt p, QuadExt q, QuadExt r, QuadExt s);  // throws DomainError unless det > 0

  const QuadExt& p() const { return p_; }
  const QuadExt& q() const { return q_; }
  const QuadExt& r() const { return r_; }
  const QuadExt& s() const { return s_; }
  QuadExt det() const { return p_ * s_ - q_ * r_; }
  bool is_affine() const { return r_.is_zero(); }

  PPoint operator()(const PPoint& x) const;

  friend Mobius operator*(const Mobius& f, const Mobius& g);  // f o g
  Mobius inverse() const;

  friend bool operator==(const Mobius&, const Mobius&) = default;
  friend auto operator<=>(const Mobius&, const Mobius&) = default;
  std::string str() const;

 private:
  QuadExt p_, q_, r_, s_;
};

struct Interval {
  QuadExt lo;
  QuadExt hi;
  bool contains(const Interval& other) const { return lo <= other.lo && other.hi <= hi; }
  friend bool operator==(const Interval&, const Interval&) = default;
  std::string str() const { return "[" + lo.str() + ", " + hi.str() + "]"; }
};

/// Piecewise projective homeomorphism of the line fixing infinity.
///
/// Finite cuts c_0 < ... < c_{k-1} split R into k+1 closed pieces; piece i
/// carries a Mobius map. Infinity is a formal cut joining the two unbounded
/// pieces, which are therefore affine. Adjacent equal pieces are merged, so
/// equality is structural.
class PPMap {
 public:
  PPMap() : maps_{Mobius()} {}

  /// Checks continuity at every cut, orientation, absence of poles on each
  /// piece and affine ends; then merges. Throws PreconditionError otherwise.
  static PPMap from_pieces(std::vector<QuadExt> cuts, std::vector<Mobius> maps);

  const std::vector<QuadExt>& cuts() const { return cuts_; }
  const std::vector<Mobius>& maps() const { return maps_; }
  bool is_identity() const { return cuts_.empty() && maps_[0] == Mobius(); }

  PPoint operator()(const PPoint& x) const;
  QuadExt operator()(const QuadExt& x) const { return *(*this)(PPoint(x)); }
  Interval image(const Interval& i) const { return {(*this)(i.lo), (*this)(i.hi)}; }
  /// Mobius of the piece containing x; at a cut, the piece to its right.
  const Mobius& piece_at(const QuadExt& x) const;
  const Mobius& piece_left_of(const QuadExt& x) const;

  friend bool operator==(const PPMap&, const PPMap&) = default;
  friend auto operator<=>(const PPMap&, const PPMap&) = default;
  std::string str() const;

 private:
  std::vector<QuadExt> cuts_;
  std::vector<Mobius> maps_;
};

PPMap compose(const PPMap& f, const PPMap& g);  // f o g
PPMap inverse(const PPMap& f);
inline PPMap operator*(const PPMap& f, const PPMap& g) { return compose(f, g); }

/// One-sided values at every cut agree exactly.
bool is_continuous(const PPMap& f);

/// {"cuts": [quad, ...], "pieces": [[p, q, r, s], ...]}
Json to_json(const PPMap& f);
PPMap ppmap_from_json(const Json& j);

}  // namespace germlab::proj
