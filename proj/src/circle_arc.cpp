#include "germlab/circle/arc.hpp"

#include "germlab/error.hpp"

namespace germlab::circle {

Arc Arc::make(const Rational& from, const Rational& to, bool closed) {
  Arc a;
  a.start = frac(from);
  const Rational span = to - from;
  Rational len = frac(span);
  if (len == 0 && span != 0) len = 1;
  if (len == 0 && !closed) throw PreconditionError("empty open arc");
  a.end = a.start + len;
  a.closed = closed;
  return a;
}

Arc Arc::point(const Rational& x) {
  const Rational s = frac(x);
  return {s, s, true};
}

bool Arc::contains(const Rational& x) const {
  const Rational lifted = start + frac(x - start);
  if (lifted == start) return closed;
  if (lifted < end) return true;
  return closed && lifted == end;
}

bool Arc::inside(const Arc& outer) const {
  if (is_point()) return outer.contains(start);
  if (outer.is_full()) return true;
  const Rational s = outer.start + frac(start - outer.start);
  const Rational e = s + length();
  if (closed && !outer.closed) return s > outer.start && e < outer.end;
  return s >= outer.start && e <= outer.end;
}

namespace {

bool interiors_meet(const Arc& a, const Arc& b) {
  if (a.length() == 0 || b.length() == 0) return false;
  const Rational s = a.start + frac(b.start - a.start);
  return s < a.end || s + b.length() > a.start + 1;
}

}  // namespace

bool Arc::meets(const Arc& other) const {
  if (closed && (other.contains(start) || other.contains(end))) return true;
  if (other.closed && (contains(other.start) || contains(other.end))) return true;
  return interiors_meet(*this, other);
}

std::string Arc::str() const {
  return std::string(closed ? "[" : "]") + to_string(start) + "," + to_string(end) + (closed ? "]" : "[");
}

bool region_contains(const Region& region, const Rational& x) {
  for (const auto& a : region)
    if (a.contains(x)) return true;
  return false;
}

bool region_inside(const Region& inner, const Region& outer) {
  for (const auto& a : inner) {
    bool found = false;
    for (const auto& b : outer)
      if (a.inside(b)) {
        found = true;
        break;
      }
    if (!found) return false;
  }
  return true;
}

bool regions_meet(const Region& a, const Region& b) {
  for (const auto& x : a)
    for (const auto& y : b)
      if (x.meets(y)) return true;
  return false;
}

}  // namespace germlab::circle
