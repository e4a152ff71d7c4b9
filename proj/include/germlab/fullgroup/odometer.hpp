#pragma once

#include "germlab/cantor/sequence.hpp"
#include "germlab/exact/json.hpp"
#include "germlab/exact/rational.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace germlab::fullgroup {

using cantor::EventuallyPeriodic;
using cantor::Word;

// Digit i of a sequence has weight 2^i, so {0,1}^N is the 2-adic integers
// and +1 is add-with-carry from the left. Eventually periodic sequences
// are exactly the rationals with odd denominator.

Rational to_adic(const EventuallyPeriodic& x);
/// Throws PreconditionError for an even denominator.
EventuallyPeriodic from_adic(const Rational& r);
/// x + n.
EventuallyPeriodic odometer_step(const EventuallyPeriodic& x, std::int64_t n);

/// Canonical clopen set: sorted antichain of cylinder words with sibling
/// pairs merged. {} is empty, {""} the whole space.
using Clopen = std::vector<Word>;

Clopen make_clopen(std::vector<Word> words);
/// C_w + n, which is the cylinder of the same length on the shifted digits.
Word translate(const Word& w, std::int64_t n);
Clopen translate(const Clopen& U, std::int64_t n);
bool contains(const Clopen& U, const EventuallyPeriodic& x);
Clopen intersect(const Clopen& a, const Clopen& b);
Clopen unite(const Clopen& a, const Clopen& b);
Clopen complement(const Clopen& a);
bool disjoint(const Clopen& a, const Clopen& b);
bool subset(const Clopen& a, const Clopen& b);
std::string to_string(const Clopen& U);  // "{0,10}", "{}" or "{e}"
/// Comma-separated words; "e" or "" alone is the whole space.
Clopen parse_clopen(const std::string& s);

/// T = {0, ..., R-1} with R the longest wait before an orbit enters U, so
/// for every x and g some h in T + g has x + h in U. Throws
/// PreconditionError for empty U.
std::vector<std::int64_t> return_set(const Clopen& U);

struct Piece {
  Word cylinder;
  std::int64_t shift;
  friend bool operator==(const Piece&, const Piece&) = default;
  friend auto operator<=>(const Piece&, const Piece&) = default;
};

/// x -> x + shift on each domain cylinder. Kept as the coarsest cylinder
/// partition on which the shift is constant, sorted; by freeness the shift
/// function determines the map, so equality is structural.
class FullGroupElement {
 public:
  FullGroupElement();  // identity

  /// Domain cylinders and their images must both partition the space.
  /// Throws PreconditionError otherwise.
  static FullGroupElement from_pieces(std::vector<Piece> pieces);

  const std::vector<Piece>& pieces() const { return pieces_; }
  std::int64_t shift_at(const EventuallyPeriodic& x) const;
  EventuallyPeriodic operator()(const EventuallyPeriodic& x) const;
  bool is_identity() const { return pieces_.size() == 1 && pieces_[0].shift == 0; }
  /// Union of the pieces with non-zero shift.
  Clopen support() const;
  std::string str() const;

  friend bool operator==(const FullGroupElement&, const FullGroupElement&) = default;
  friend auto operator<=>(const FullGroupElement&, const FullGroupElement&) = default;

 private:
  std::vector<Piece> pieces_;
};

/// f o g.
FullGroupElement compose(const FullGroupElement& f, const FullGroupElement& g);
FullGroupElement inverse(const FullGroupElement& f);
inline FullGroupElement operator*(const FullGroupElement& f, const FullGroupElement& g) { return compose(f, g); }

/// x + t on V, x - t on V + t, identity elsewhere. Throws PreconditionError
/// for t = 0 or (V + t) meeting V.
FullGroupElement gamma_tv(std::int64_t t, const Clopen& V);

/// Clopen partition of U_t = U n (U - t) into pieces V with V + t disjoint
/// from V and inside U: the cylinders of a level fine enough for U and for
/// t mod 2^level != 0.
std::vector<Clopen> admissible_partition(const Clopen& U, std::int64_t t);

/// All gamma_{t,V} with 0 < |t| <= 3 * step and V in the partition of U_t.
std::vector<FullGroupElement> restricted_generators(const Clopen& U, int step);

/// [[cylinder, shift], ...]
Json to_json(const FullGroupElement& f);
FullGroupElement full_group_from_json(const Json& j);

}  // namespace germlab::fullgroup
