#pragma once

#include "germlab/circle/plmap.hpp"

#include <string_view>
#include <vector>

namespace germlab::circle {

/// Standard generators. A and B generate F; adding C gives T.
///   A: x/2 on [0,1/2], x-1/4 on [1/2,3/4], 2x-1 on [3/4,1]
///   B: identity on [0,1/2], then a copy of A on [1/2,1]
///   C: x/2+3/4 on [0,1/2], 2x-1 on [1/2,3/4], x-1/4 on [3/4,1] (mod 1)
const PLMap& gen_A();
const PLMap& gen_B();
const PLMap& gen_C();

enum class Group { F, T };

/// Evaluates a word over {a,b,c} (upper case = inverse) as the composite
/// l1 o l2 o ... o lk, i.e. the rightmost letter acts first.
/// Throws ParseError for letters outside the group's alphabet.
PLMap word(Group g, std::string_view letters);

/// Membership predicates for the two groups.
bool in_T(const PLMap& f);
inline bool in_F(const PLMap& f) { return f.in_F(); }

/// One-sided germ of f at a point.
struct SideGerm {
  bool identity = false;  // f is the identity on a one-sided neighbourhood
  int slope_exp = 0;      // log2 of the one-sided slope
  friend bool operator==(const SideGerm&, const SideGerm&) = default;
};

struct GermData {
  SideGerm left;
  SideGerm right;
  bool fixes_point = false;
  bool identity_germ() const { return left.identity && right.identity; }
};

GermData germ_data(const PLMap& f, const Rational& x);

/// f lies in [F,F]: f fixes 0 and is the identity near 0 on both sides.
bool in_derived_F(const PLMap& f);

/// Partition of the circle into moved and fixed parts.
struct SupportFix {
  Region moved;         // maximal open arcs of moved points
  Region support;       // closure of `moved`, as maximal closed arcs
  Region fixed_arcs;    // maximal closed arcs of positive length fixed pointwise
  std::vector<Rational> fixed_points;  // isolated fixed points
};

SupportFix support_fix(const PLMap& f);

/// supp(f) is contained in the closed arc [a,b] (lifted, a <= b <= a+1).
bool support_inside(const PLMap& f, const Region& region);
/// f and g coincide on every point of `arc`.
bool agree_on(const PLMap& f, const PLMap& g, const Arc& arc);

/// Affine conjugate of an F-element into [a,b]; identity outside [a,b].
PLMap embed(const PLMap& f, const Dyadic& a, const Dyadic& b);

/// Generators of the copy of F supported in [a,b]: the conjugates of A, B.
/// Requires 0 <= a < b <= 1.
std::vector<PLMap> rigid_stabilizer_gens(const Dyadic& a, const Dyadic& b);

/// Increasing PL map [p,q] -> [p2,q2] with slopes in 2^Z and dyadic
/// breakpoints, as pieces of the interval map (no wraparound).
std::vector<Piece> dyadic_bridge(const Dyadic& p, const Dyadic& q, const Dyadic& p2, const Dyadic& q2);

/// Element of [F,F] compressing the closed set C into an open arc around 0.
///
/// `target` must be an open arc ]beta, alpha[ containing 0 with dyadic
/// endpoints; C a union of closed arcs with dyadic endpoints that misses some
/// open arc. Throws Infeasible if C is the whole circle.
struct Compression {
  PLMap map;
  Dyadic gap_left, gap_right;    // ]a,b[ used by the construction
  Dyadic alpha, beta;            // target endpoints after shrinking
  int n = 0;                     // contraction exponent
};
Compression compress(const Region& C, const Arc& target);

/// Smallest dyadic strictly between lo and hi (fewest binary digits).
Dyadic dyadic_between(const Rational& lo, const Rational& hi);

}  // namespace germlab::circle
