#include "germlab/circle/plmap.hpp"

#include "germlab/error.hpp"

#include <algorithm>
#include <sstream>

namespace germlab::circle {

namespace {

Rational pow2(int k) {
  return k >= 0 ? Rational(Integer(1) << k) : Rational(Integer(1), Integer(1) << -k);
}

// Rebuilds a canonical map from the lift's value and right slope at each cut.
// The lift must be affine between consecutive cuts.
template <typename Fn>
std::vector<Piece> pieces_from_cuts(std::vector<Dyadic> cuts, Fn&& value_and_slope) {
  cuts.push_back(Dyadic(0));
  std::sort(cuts.begin(), cuts.end());
  cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());
  std::vector<Piece> out;
  out.reserve(cuts.size());
  for (const auto& c : cuts) {
    auto [value, slope] = value_and_slope(c);
    out.push_back(Piece{c, slope, value - c.shifted(slope)});
  }
  return out;
}

void canonicalize(std::vector<Piece>& pieces) {
  const Integer k = pieces.front().intercept.floor();  // lift(0) = intercept of the first piece
  if (k != 0)
    for (auto& p : pieces) p.intercept -= Dyadic(k);
  std::vector<Piece> merged;
  merged.reserve(pieces.size());
  for (auto& p : pieces) {
    if (!merged.empty() && merged.back().slope_exp == p.slope_exp && merged.back().intercept == p.intercept)
      continue;
    merged.push_back(std::move(p));
  }
  pieces = std::move(merged);
}

}  // namespace

Rational Piece::apply(const Rational& x) const { return pow2(slope_exp) * x + intercept.to_rational(); }

PLMap::PLMap() : pieces_{Piece{Dyadic(0), 0, Dyadic(0)}} {}

bool is_valid_T(const std::vector<Piece>& pieces) {
  if (pieces.empty() || !pieces.front().left.is_zero()) return false;
  for (std::size_t i = 0; i < pieces.size(); ++i) {
    const Dyadic next = i + 1 < pieces.size() ? pieces[i + 1].left : Dyadic(1);
    if (pieces[i].left >= next) return false;
    const Dyadic expected = i + 1 < pieces.size() ? pieces[i + 1].apply(next) : pieces.front().apply(Dyadic(0)) + Dyadic(1);
    if (pieces[i].apply(next) != expected) return false;
  }
  return true;
}

PLMap PLMap::from_pieces(std::vector<Piece> pieces) {
  if (!is_valid_T(pieces)) throw PreconditionError("pieces do not describe a degree-one PL homeomorphism");
  canonicalize(pieces);
  PLMap f;
  f.pieces_ = std::move(pieces);
  return f;
}

std::vector<Dyadic> PLMap::breakpoints() const {
  std::vector<Dyadic> out;
  out.reserve(pieces_.size());
  for (const auto& p : pieces_) out.push_back(p.left);
  return out;
}

std::size_t PLMap::piece_index(const Dyadic& x) const {
  auto it = std::upper_bound(pieces_.begin(), pieces_.end(), x,
                             [](const Dyadic& v, const Piece& p) { return v < p.left; });
  return static_cast<std::size_t>(it - pieces_.begin()) - 1;
}

std::size_t PLMap::piece_index(const Rational& x) const {
  auto it = std::upper_bound(pieces_.begin(), pieces_.end(), x,
                             [](const Rational& v, const Piece& p) { return v < p.left.to_rational(); });
  return static_cast<std::size_t>(it - pieces_.begin()) - 1;
}

Dyadic PLMap::lift(const Dyadic& x) const {
  const Integer n = x.floor();
  const Dyadic y = x - Dyadic(n);
  return pieces_[piece_index(y)].apply(y) + Dyadic(n);
}

Rational PLMap::lift(const Rational& x) const {
  const Integer n = floor(x);
  const Rational y = x - Rational(n);
  return pieces_[piece_index(y)].apply(y) + Rational(n);
}

int PLMap::right_slope(const Rational& x) const { return pieces_[piece_index(frac(x))].slope_exp; }

int PLMap::left_slope(const Rational& x) const {
  const Rational y = frac(x);
  if (y == 0) return pieces_.back().slope_exp;
  auto it = std::lower_bound(pieces_.begin(), pieces_.end(), y,
                             [](const Piece& p, const Rational& v) { return p.left.to_rational() < v; });
  return std::prev(it)->slope_exp;
}

Dyadic PLMap::preimage(const Dyadic& y) const {
  const Dyadic y0 = pieces_.front().intercept;
  const Dyadic target = y >= y0 ? y : y + Dyadic(1);
  std::size_t i = pieces_.size() - 1;
  for (std::size_t j = 1; j < pieces_.size(); ++j)
    if (pieces_[j].apply(pieces_[j].left) > target) {
      i = j - 1;
      break;
    }
  return (target - pieces_[i].intercept).shifted(-pieces_[i].slope_exp);
}

Arc PLMap::image(const Arc& a) const {
  const Rational s = lift(a.start);
  const Rational e = lift(a.end);
  const Rational fs = frac(s);
  return Arc{fs, fs + (e - s), a.closed};
}

Region PLMap::image(const Region& r) const {
  Region out;
  out.reserve(r.size());
  for (const auto& a : r) out.push_back(image(a));
  return out;
}

std::string PLMap::str() const {
  std::ostringstream os;
  os << "{";
  for (std::size_t i = 0; i < pieces_.size(); ++i) {
    if (i) os << "; ";
    os << pieces_[i].left.str() << ": 2^" << pieces_[i].slope_exp << "x+" << pieces_[i].intercept.str();
  }
  os << "}";
  return os.str();
}

PLMap compose(const PLMap& f, const PLMap& g) {
  std::vector<Dyadic> cuts = g.breakpoints();
  for (const auto& p : f.pieces()) cuts.push_back(g.preimage(p.left));
  auto pieces = pieces_from_cuts(std::move(cuts), [&](const Dyadic& c) {
    const Dyadic z = g.lift(c);
    return std::pair{f.lift(z), g.right_slope(c) + f.right_slope(z)};
  });
  return PLMap::from_pieces(std::move(pieces));
}

PLMap inverse(const PLMap& f) {
  std::vector<Dyadic> cuts;
  for (const auto& p : f.pieces()) cuts.push_back(p.apply(p.left).frac());
  const Dyadic y0 = f.lift(Dyadic(0));
  auto pieces = pieces_from_cuts(std::move(cuts), [&](const Dyadic& y) {
    const Dyadic x = f.preimage(y);
    const Dyadic value = y >= y0 ? x : x - Dyadic(1);
    return std::pair{value, -f.right_slope(x)};
  });
  return PLMap::from_pieces(std::move(pieces));
}

PLMap commutator(const PLMap& g, const PLMap& h) { return g * h * inverse(g) * inverse(h); }

PLMap conjugate(const PLMap& g, const PLMap& by) { return by * g * inverse(by); }

Json to_json(const PLMap& f) {
  Json out = Json::array();
  for (const auto& p : f.pieces())
    out.push_back(Json{{"left", to_json(p.left)}, {"slope_exp", p.slope_exp}, {"intercept", to_json(p.intercept)}});
  return out;
}

PLMap plmap_from_json(const Json& j) {
  std::vector<Piece> pieces;
  try {
    for (const auto& item : j)
      pieces.push_back(Piece{dyadic_from_json(item.at("left")), item.at("slope_exp").get<int>(),
                             dyadic_from_json(item.at("intercept"))});
  } catch (const ParseError&) {
    throw;
  } catch (const std::exception& e) {
    throw ParseError(std::string("bad PLMap JSON: ") + e.what());
  }
  try {
    return PLMap::from_pieces(std::move(pieces));
  } catch (const PreconditionError& e) {
    throw ParseError(e.what());
  }
}

}  // namespace germlab::circle
