#include "germlab/proj/ppmap.hpp"

#include "germlab/error.hpp"

#include <algorithm>

namespace germlab::proj {

std::string to_string(const PPoint& x) { return x ? x->str() : "inf"; }

Mobius::Mobius(QuadExt p, QuadExt q, QuadExt r, QuadExt s) : p_(std::move(p)), q_(std::move(q)), r_(std::move(r)), s_(std::move(s)) {
  if (det().sign() <= 0) throw DomainError("Mobius map needs a positive determinant");
  const QuadExt lead = !p_.is_zero() ? p_ : (!q_.is_zero() ? q_ : r_);
  if (lead != QuadExt(1)) {
    const QuadExt inv = lead.inverse();
    p_ = p_ * inv;
    q_ = q_ * inv;
    r_ = r_ * inv;
    s_ = s_ * inv;
  }
}

PPoint Mobius::operator()(const PPoint& x) const {
  if (!x) {
    if (r_.is_zero()) return std::nullopt;
    return p_ / r_;
  }
  const QuadExt den = r_ * *x + s_;
  if (den.is_zero()) return std::nullopt;
  return (p_ * *x + q_) / den;
}

Mobius operator*(const Mobius& f, const Mobius& g) {
  return {f.p_ * g.p_ + f.q_ * g.r_, f.p_ * g.q_ + f.q_ * g.s_, f.r_ * g.p_ + f.s_ * g.r_, f.r_ * g.q_ + f.s_ * g.s_};
}

Mobius Mobius::inverse() const { return {s_, -q_, -r_, p_}; }

std::string Mobius::str() const { return "[" + p_.str() + " " + q_.str() + "; " + r_.str() + " " + s_.str() + "]"; }

namespace {

bool pole_in(const Mobius& m, const QuadExt& lo, const QuadExt& hi) {
  if (m.r().is_zero()) return false;
  const QuadExt pole = -m.s() / m.r();
  return lo <= pole && pole <= hi;
}

QuadExt sample(const std::vector<QuadExt>& cuts, std::size_t piece) {
  if (cuts.empty()) return QuadExt(0);
  if (piece == 0) return cuts.front() - QuadExt(1);
  if (piece == cuts.size()) return cuts.back() + QuadExt(1);
  return (cuts[piece - 1] + cuts[piece]) * QuadExt(Rational(1, 2));
}

}  // namespace

PPMap PPMap::from_pieces(std::vector<QuadExt> cuts, std::vector<Mobius> maps) {
  if (maps.size() != cuts.size() + 1) throw PreconditionError("need one Mobius map per piece");
  for (std::size_t i = 0; i + 1 < cuts.size(); ++i)
    if (!(cuts[i] < cuts[i + 1])) throw PreconditionError("cuts must increase strictly");
  if (!maps.front().is_affine() || !maps.back().is_affine())
    throw PreconditionError("unbounded pieces must fix infinity (affine)");
  for (std::size_t i = 1; i < cuts.size(); ++i)
    if (pole_in(maps[i], cuts[i - 1], cuts[i])) throw PreconditionError("pole inside piece " + std::to_string(i));
  for (std::size_t i = 0; i < cuts.size(); ++i)
    if (maps[i](cuts[i]) != maps[i + 1](cuts[i]))
      throw PreconditionError("discontinuity at " + cuts[i].str());
  PPMap f;
  f.cuts_.clear();
  f.maps_ = {maps[0]};
  for (std::size_t i = 0; i < cuts.size(); ++i) {
    if (maps[i + 1] == f.maps_.back()) continue;
    f.cuts_.push_back(cuts[i]);
    f.maps_.push_back(maps[i + 1]);
  }
  return f;
}

PPoint PPMap::operator()(const PPoint& x) const {
  if (!x) return std::nullopt;
  return piece_at(*x)(x);
}

const Mobius& PPMap::piece_at(const QuadExt& x) const {
  return maps_[std::upper_bound(cuts_.begin(), cuts_.end(), x) - cuts_.begin()];
}

const Mobius& PPMap::piece_left_of(const QuadExt& x) const {
  return maps_[std::lower_bound(cuts_.begin(), cuts_.end(), x) - cuts_.begin()];
}

std::string PPMap::str() const {
  std::string s = "{";
  for (std::size_t i = 0; i < maps_.size(); ++i) {
    if (i) s += "; ";
    s += (i == 0 ? std::string("(-inf") : "[" + cuts_[i - 1].str()) + ", ";
    s += (i == cuts_.size() ? std::string("inf)") : cuts_[i].str() + "]") + ": " + maps_[i].str();
  }
  return s + "}";
}

PPMap compose(const PPMap& f, const PPMap& g) {
  const PPMap gi = inverse(g);
  std::vector<QuadExt> cuts = g.cuts();
  for (const auto& c : f.cuts()) cuts.push_back(gi(c));
  std::sort(cuts.begin(), cuts.end());
  cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());
  std::vector<Mobius> maps;
  for (std::size_t i = 0; i <= cuts.size(); ++i) {
    const QuadExt x = sample(cuts, i);
    maps.push_back(f.piece_at(g(x)) * g.piece_at(x));
  }
  return PPMap::from_pieces(std::move(cuts), std::move(maps));
}

PPMap inverse(const PPMap& f) {
  std::vector<QuadExt> cuts;
  for (const auto& c : f.cuts()) cuts.push_back(f(c));
  std::vector<Mobius> maps;
  for (const auto& m : f.maps()) maps.push_back(m.inverse());
  return PPMap::from_pieces(std::move(cuts), std::move(maps));
}

bool is_continuous(const PPMap& f) {
  for (const auto& c : f.cuts())
    if (f.piece_left_of(c)(c) != f.piece_at(c)(c)) return false;
  return true;
}

Json to_json(const PPMap& f) {
  Json cuts = Json::array();
  for (const auto& c : f.cuts()) cuts.push_back(to_json(c));
  Json pieces = Json::array();
  for (const auto& m : f.maps()) pieces.push_back(Json::array({to_json(m.p()), to_json(m.q()), to_json(m.r()), to_json(m.s())}));
  return Json{{"cuts", cuts}, {"pieces", pieces}};
}

PPMap ppmap_from_json(const Json& j) {
  try {
    std::vector<QuadExt> cuts;
    for (const auto& c : j.at("cuts")) cuts.push_back(quad_from_json(c));
    std::vector<Mobius> maps;
    for (const auto& m : j.at("pieces")) {
      if (!m.is_array() || m.size() != 4) throw ParseError("piece must be [p, q, r, s]");
      maps.emplace_back(quad_from_json(m[0]), quad_from_json(m[1]), quad_from_json(m[2]), quad_from_json(m[3]));
    }
    return PPMap::from_pieces(std::move(cuts), std::move(maps));
  } catch (const Json::exception& e) {
    throw ParseError(std::string("bad piecewise projective map: ") + e.what());
  } catch (const PreconditionError& e) {
    throw ParseError(std::string("bad piecewise projective map: ") + e.what());
  } catch (const DomainError& e) {
    throw ParseError(std::string("bad piecewise projective map: ") + e.what());
  }
}

}  // namespace germlab::proj
