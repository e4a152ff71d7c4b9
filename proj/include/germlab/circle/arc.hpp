#pragma once

#include "germlab/exact/rational.hpp"

#include <string>
#include <vector>

namespace germlab::circle {

/// Arc of the circle R/Z in lifted coordinates: start in [0,1) and
/// start <= end <= start + 1, traversed in the positive direction.
///
/// end == start is a single point (closed) and end == start + 1 is the full
/// circle when closed, or the circle minus {start} when open. Endpoints are
/// rational because fixed points of dyadic PL maps need not be dyadic.
struct Arc {
  Rational start;
  Rational end;
  bool closed = true;

  static Arc make(const Rational& from, const Rational& to, bool closed);  // from, to taken mod 1
  static Arc full() { return {0, 1, true}; }
  static Arc point(const Rational& x);

  Rational length() const { return end - start; }
  bool is_point() const { return closed && end == start; }
  bool is_full() const { return closed && end == start + 1; }

  bool contains(const Rational& x) const;
  /// Exact containment of this arc in `outer`.
  bool inside(const Arc& outer) const;
  /// True iff the two arcs share at least one point.
  bool meets(const Arc& other) const;

  friend bool operator==(const Arc&, const Arc&) = default;
  std::string str() const;
};

using Region = std::vector<Arc>;

bool region_contains(const Region& region, const Rational& x);
/// Every arc of `inner` lies in a single arc of `outer`.
bool region_inside(const Region& inner, const Region& outer);
bool regions_meet(const Region& a, const Region& b);

}  // namespace germlab::circle
