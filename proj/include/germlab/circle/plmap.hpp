#pragma once

#include "germlab/circle/arc.hpp"
#include "germlab/exact/dyadic.hpp"
#include "germlab/exact/json.hpp"

#include <compare>
#include <string>
#include <vector>

namespace germlab::circle {

/// One affine piece x -> 2^slope_exp * x + intercept of the lift, valid from
/// `left` up to the next piece's left end (or 1).
struct Piece {
  Dyadic left;
  int slope_exp = 0;
  Dyadic intercept;

  Dyadic apply(const Dyadic& x) const { return x.shifted(slope_exp) + intercept; }
  Rational apply(const Rational& x) const;

  friend bool operator==(const Piece&, const Piece&) = default;
  friend auto operator<=>(const Piece& a, const Piece& b) {
    if (auto c = a.left <=> b.left; c != 0) return c;
    if (auto c = a.slope_exp <=> b.slope_exp; c != 0) return c;
    return a.intercept <=> b.intercept;
  }
};

/// Orientation-preserving PL homeomorphism of the circle R/Z with dyadic
/// breakpoints and slopes in 2^Z: an element of Thompson's group T.
///
/// Stored as its degree-one lift restricted to [0,1), normalised so that the
/// lift sends 0 into [0,1). The first piece always starts at 0 and adjacent
/// pieces never carry equal affine data, so equality of maps is equality of
/// piece lists.
class PLMap {
 public:
  PLMap();  // identity

  /// Builds from pieces of a lift; validates continuity and canonicalises.
  /// Throws PreconditionError if the pieces do not describe a homeomorphism.
  static PLMap from_pieces(std::vector<Piece> pieces);

  const std::vector<Piece>& pieces() const { return pieces_; }
  std::vector<Dyadic> breakpoints() const;  // lefts, first is always 0

  /// Lifted value, valid for any real input.
  Dyadic lift(const Dyadic& x) const;
  Rational lift(const Rational& x) const;
  /// Point of the circle, in [0,1).
  Dyadic operator()(const Dyadic& x) const { return lift(x).frac(); }
  Rational operator()(const Rational& x) const { return frac(lift(x)); }

  /// log2 of the slope just right (resp. left) of x.
  int right_slope(const Rational& x) const;
  int right_slope(const Dyadic& x) const { return pieces_[piece_index(x.frac())].slope_exp; }
  int left_slope(const Rational& x) const;

  /// Preimage of a circle point, in [0,1).
  Dyadic preimage(const Dyadic& y) const;

  Arc image(const Arc& a) const;
  Region image(const Region& r) const;

  bool is_identity() const { return *this == PLMap(); }
  bool in_F() const { return lift(Dyadic(0)).is_zero(); }

  friend bool operator==(const PLMap&, const PLMap&) = default;
  friend auto operator<=>(const PLMap& a, const PLMap& b) { return a.pieces_ <=> b.pieces_; }

  std::string str() const;

 private:
  std::size_t piece_index(const Dyadic& x) const;  // x in [0,1)
  std::size_t piece_index(const Rational& x) const;

  std::vector<Piece> pieces_;
};

/// f o g.
PLMap compose(const PLMap& f, const PLMap& g);
PLMap inverse(const PLMap& f);
inline PLMap operator*(const PLMap& f, const PLMap& g) { return compose(f, g); }

/// g h g^-1 h^-1.
PLMap commutator(const PLMap& g, const PLMap& h);
PLMap conjugate(const PLMap& g, const PLMap& by);  // by g by^-1

/// Continuity, bijectivity and T-membership of the raw data.
bool is_valid_T(const std::vector<Piece>& pieces);

/// [{left, slope_exp, intercept}, ...]
Json to_json(const PLMap& f);
PLMap plmap_from_json(const Json& j);

}  // namespace germlab::circle
