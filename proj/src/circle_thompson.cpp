#include "germlab/circle/thompson.hpp"

#include "germlab/error.hpp"

#include <algorithm>

namespace germlab::circle {

namespace {

Dyadic dy(long long num, int exp) { return Dyadic::normalize(Integer(num), exp); }

PLMap make_A() {
  return PLMap::from_pieces({{dy(0, 0), -1, dy(0, 0)}, {dy(1, 1), 0, dy(-1, 2)}, {dy(3, 2), 1, dy(-1, 0)}});
}

PLMap make_B() {
  return PLMap::from_pieces({{dy(0, 0), 0, dy(0, 0)},
                             {dy(1, 1), -1, dy(1, 2)},
                             {dy(3, 2), 0, dy(-1, 3)},
                             {dy(7, 3), 1, dy(-1, 0)}});
}

PLMap make_C() {
  return PLMap::from_pieces({{dy(0, 0), -1, dy(3, 2)}, {dy(1, 1), 1, dy(0, 0)}, {dy(3, 2), 0, dy(3, 2)}});
}

Rational pow2r(int k) {
  return k >= 0 ? Rational(Integer(1) << k) : Rational(Integer(1), Integer(1) << -k);
}

struct Interval {
  Rational lo, hi;
};

}  // namespace

const PLMap& gen_A() {
  static const PLMap a = make_A();
  return a;
}

const PLMap& gen_B() {
  static const PLMap b = make_B();
  return b;
}

const PLMap& gen_C() {
  static const PLMap c = make_C();
  return c;
}

PLMap word(Group g, std::string_view letters) {
  PLMap out;
  for (char ch : letters) {
    const bool inv = ch >= 'A' && ch <= 'Z';
    const char lower = inv ? static_cast<char>(ch - 'A' + 'a') : ch;
    const PLMap* gen = nullptr;
    if (lower == 'a') gen = &gen_A();
    else if (lower == 'b') gen = &gen_B();
    else if (lower == 'c' && g == Group::T) gen = &gen_C();
    if (!gen) throw ParseError(std::string("letter '") + ch + "' is not a generator of " + (g == Group::F ? "F" : "T"));
    out = out * (inv ? inverse(*gen) : *gen);
  }
  return out;
}

bool in_T(const PLMap& f) { return is_valid_T(f.pieces()); }

GermData germ_data(const PLMap& f, const Rational& x) {
  GermData g;
  g.fixes_point = f(x) == frac(x);
  g.right.slope_exp = f.right_slope(x);
  g.left.slope_exp = f.left_slope(x);
  g.right.identity = g.fixes_point && g.right.slope_exp == 0;
  g.left.identity = g.fixes_point && g.left.slope_exp == 0;
  return g;
}

bool in_derived_F(const PLMap& f) { return f.in_F() && germ_data(f, Rational(0)).identity_germ(); }

SupportFix support_fix(const PLMap& f) {
  SupportFix out;
  if (f.is_identity()) {
    out.fixed_arcs.push_back(Arc::full());
    return out;
  }

  // Fixed components of the lift on [0,1]: solutions of f(x) = x + n.
  std::vector<Interval> comps;
  const auto& pieces = f.pieces();
  for (std::size_t i = 0; i < pieces.size(); ++i) {
    const Rational lo = pieces[i].left.to_rational();
    const Rational hi = i + 1 < pieces.size() ? pieces[i + 1].left.to_rational() : Rational(1);
    const Rational c = pieces[i].intercept.to_rational();
    const int s = pieces[i].slope_exp;
    for (int n = -1; n <= 2; ++n) {
      if (s == 0) {
        if (c == n) comps.push_back({lo, hi});
        continue;
      }
      const Rational x = (Rational(n) - c) / (pow2r(s) - 1);
      if (x >= lo && x <= hi) comps.push_back({x, x});
    }
  }
  std::sort(comps.begin(), comps.end(), [](const Interval& a, const Interval& b) {
    return a.lo < b.lo || (a.lo == b.lo && a.hi < b.hi);
  });
  std::vector<Interval> merged;
  for (const auto& c : comps) {
    if (!merged.empty() && c.lo <= merged.back().hi) {
      merged.back().hi = std::max(merged.back().hi, c.hi);
      continue;
    }
    merged.push_back(c);
  }
  // 1 and 0 are the same point of the circle.
  if (!merged.empty() && merged.back().hi == 1) {
    Interval last = merged.back();
    merged.pop_back();
    if (!merged.empty() && merged.front().lo == 0) {
      merged.front().lo = last.lo - 1;
    } else {
      merged.insert(merged.begin(), Interval{last.lo - 1, Rational(0)});
    }
  }

  if (merged.empty()) {
    out.moved.push_back(Arc::full());
    out.support.push_back(Arc::full());
    return out;
  }

  for (const auto& c : merged) {
    if (c.lo == c.hi) out.fixed_points.push_back(frac(c.lo));
    else out.fixed_arcs.push_back(Arc::make(c.lo, c.hi, true));
  }
  std::sort(out.fixed_points.begin(), out.fixed_points.end());

  const std::size_t k = merged.size();
  for (std::size_t i = 0; i < k; ++i) {
    const Rational from = merged[i].hi;
    const Rational to = i + 1 < k ? merged[i + 1].lo : merged[0].lo + 1;
    out.moved.push_back(Arc::make(from, to, false));
  }

  // Closure: consecutive moved arcs separated by an isolated fixed point merge.
  std::vector<Interval> closed;
  for (std::size_t i = 0; i < k; ++i) {
    const Rational from = merged[i].hi;
    const Rational to = i + 1 < k ? merged[i + 1].lo : merged[0].lo + 1;
    if (!closed.empty() && closed.back().hi == from) closed.back().hi = to;
    else closed.push_back({from, to});
  }
  if (closed.size() > 1 && closed.back().hi == closed.front().lo + 1) {
    closed.front().lo = closed.back().lo - 1;
    closed.pop_back();
  }
  for (const auto& c : closed) {
    if (c.hi - c.lo >= 1) out.support.push_back(Arc::full());
    else out.support.push_back(Arc::make(c.lo, c.hi, true));
  }
  return out;
}

bool support_inside(const PLMap& f, const Region& region) {
  return region_inside(support_fix(f).support, region);
}

bool agree_on(const PLMap& f, const PLMap& g, const Arc& arc) {
  const PLMap h = inverse(f) * g;
  if (arc.is_point()) return h(arc.start) == arc.start;
  if (h.is_identity()) return true;
  for (const auto& fixed : support_fix(h).fixed_arcs)
    if (arc.inside(fixed)) return true;
  return false;
}

PLMap embed(const PLMap& f, const Dyadic& a, const Dyadic& b) {
  if (!f.in_F()) throw PreconditionError("embed: map does not fix 0");
  const Dyadic width = b - a;
  std::vector<Piece> pieces;
  if (!a.is_zero()) pieces.push_back({Dyadic(0), 0, Dyadic(0)});
  for (const auto& p : f.pieces())
    pieces.push_back({a + width * p.left, p.slope_exp, a - a.shifted(p.slope_exp) + width * p.intercept});
  if (b < Dyadic(1)) pieces.push_back({b, 0, Dyadic(0)});
  return PLMap::from_pieces(std::move(pieces));
}

std::vector<PLMap> rigid_stabilizer_gens(const Dyadic& a, const Dyadic& b) {
  if (a < Dyadic(0) || b > Dyadic(1) || !(a < b))
    throw PreconditionError("rigid_stabilizer_gens: need 0 <= a < b <= 1, got " + a.str() + ", " + b.str());
  return {embed(gen_A(), a, b), embed(gen_B(), a, b)};
}

namespace {

// Standard dyadic intervals [k/2^m, (k+1)/2^m] tiling [p,q], greedy from p.
std::vector<std::pair<Dyadic, int>> standard_tiling(const Dyadic& p, const Dyadic& q) {
  std::vector<std::pair<Dyadic, int>> out;  // (left end, m) with length 2^-m
  Dyadic x = p;
  while (x < q) {
    int m = static_cast<int>(x.exponent());
    while (x + Dyadic::pow2(-m) > q) ++m;
    out.emplace_back(x, m);
    x += Dyadic::pow2(-m);
  }
  return out;
}

void split_largest(std::vector<std::pair<Dyadic, int>>& tiles) {
  auto it = std::min_element(tiles.begin(), tiles.end(), [](const auto& u, const auto& v) { return u.second < v.second; });
  const Dyadic left = it->first;
  const int m = it->second + 1;
  *it = {left, m};
  tiles.insert(std::next(it), {left + Dyadic::pow2(-m), m});
}

}  // namespace

std::vector<Piece> dyadic_bridge(const Dyadic& p, const Dyadic& q, const Dyadic& p2, const Dyadic& q2) {
  if (!(p < q) || !(p2 < q2)) throw PreconditionError("dyadic_bridge: degenerate interval");
  auto src = standard_tiling(p, q);
  auto dst = standard_tiling(p2, q2);
  while (src.size() < dst.size()) split_largest(src);
  while (dst.size() < src.size()) split_largest(dst);
  std::vector<Piece> out;
  out.reserve(src.size());
  for (std::size_t i = 0; i < src.size(); ++i) {
    const int s = src[i].second - dst[i].second;
    out.push_back({src[i].first, s, dst[i].first - src[i].first.shifted(s)});
  }
  return out;
}

Dyadic dyadic_between(const Rational& lo, const Rational& hi) {
  if (!(lo < hi)) throw PreconditionError("dyadic_between: empty interval");
  for (int k = 0;; ++k) {
    const Integer scale = Integer(1) << k;
    const Integer m = floor(lo * Rational(scale)) + 1;
    if (Rational(m, scale) < hi) return Dyadic::normalize(m, k);
  }
}

namespace {

// Largest open gap of the complement of C inside ]0,1[.
Interval largest_gap(const Region& C) {
  std::vector<Interval> covered;
  for (const auto& a : C) {
    if (a.is_full()) throw Infeasible("compress: C is the whole circle");
    if (a.end <= 1) {
      covered.push_back({a.start, a.end});
    } else {
      covered.push_back({a.start, Rational(1)});
      covered.push_back({Rational(0), a.end - 1});
    }
  }
  std::sort(covered.begin(), covered.end(), [](const Interval& u, const Interval& v) { return u.lo < v.lo; });
  Interval best{0, 0};
  Rational cursor = 0;
  auto consider = [&](const Rational& lo, const Rational& hi) {
    if (hi - lo > best.hi - best.lo) best = {lo, hi};
  };
  for (const auto& c : covered) {
    if (c.lo > cursor) consider(cursor, c.lo);
    cursor = std::max(cursor, c.hi);
  }
  if (cursor < 1) consider(cursor, Rational(1));
  if (best.hi == best.lo) throw Infeasible("compress: C covers the circle");
  return best;
}

PLMap compression_map(const Dyadic& alpha1, const Dyadic& a, const Dyadic& b, const Dyadic& beta1, int n) {
  if (n == 0) return PLMap();
  const Dyadic shrink = Dyadic(1) - Dyadic::pow2(-n);
  const Dyadic ga = a.shifted(-n) + alpha1 * shrink;
  const Dyadic gb = b.shifted(-n) + beta1 * shrink;
  std::vector<Piece> pieces;
  pieces.push_back({Dyadic(0), 0, Dyadic(0)});
  pieces.push_back({alpha1, -n, alpha1 * shrink});
  for (auto& p : dyadic_bridge(a, b, ga, gb)) pieces.push_back(std::move(p));
  pieces.push_back({b, -n, beta1 * shrink});
  pieces.push_back({beta1, 0, Dyadic(0)});
  return PLMap::from_pieces(std::move(pieces));
}

}  // namespace

Compression compress(const Region& C, const Arc& target) {
  if (target.closed || target.length() == 0) throw PreconditionError("compress: target must be a non-empty open arc");
  if (!target.contains(Rational(0))) throw PreconditionError("compress: target must contain 0");
  if (target.length() == 1) throw PreconditionError("compress: target must be a proper arc around 0");

  Compression out;
  if (C.empty() || region_inside(C, Region{target})) return out;

  Rational alpha_r = target.end - 1;
  Rational beta_r = target.start;
  out.alpha = is_dyadic(alpha_r) ? to_dyadic(alpha_r) : dyadic_between(Rational(0), alpha_r);
  out.beta = is_dyadic(beta_r) ? to_dyadic(beta_r) : dyadic_between(beta_r, Rational(1));

  const Interval gap = largest_gap(C);
  out.gap_left = is_dyadic(gap.lo) && gap.lo > 0 ? to_dyadic(gap.lo) : dyadic_between(gap.lo, gap.hi);
  out.gap_right = is_dyadic(gap.hi) && gap.hi < 1 ? to_dyadic(gap.hi) : dyadic_between(out.gap_left.to_rational(), gap.hi);

  while (!(out.alpha.shifted(-1) < out.gap_left)) out.alpha = out.alpha.shifted(-1);
  while (!((Dyadic(1) + out.beta).shifted(-1) > out.gap_right)) out.beta = (Dyadic(1) + out.beta).shifted(-1);
  const Arc shrunk = Arc::make(out.beta.to_rational(), out.alpha.to_rational(), false);
  const Dyadic alpha1 = out.alpha.shifted(-1);
  const Dyadic beta1 = (Dyadic(1) + out.beta).shifted(-1);

  // The contracted image of C approaches [beta1, alpha1] around 0, so a
  // finite n always suffices; the bound only guards against bad input.
  for (int n = 0; n < 4096; ++n) {
    PLMap g = compression_map(alpha1, out.gap_left, out.gap_right, beta1, n);
    if (region_inside(g.image(C), Region{shrunk})) {
      out.map = std::move(g);
      out.n = n;
      return out;
    }
  }
  throw Infeasible("compress: no contraction exponent found");
}

}  // namespace germlab::circle
