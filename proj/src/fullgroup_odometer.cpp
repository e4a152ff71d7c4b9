#include "germlab/fullgroup/odometer.hpp"

#include "germlab/cantor/prefix_map.hpp"
#include "germlab/error.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace germlab::fullgroup {

namespace {

using boost::multiprecision::denominator;
using boost::multiprecision::numerator;

constexpr int kMaxLevel = 24;

std::uint64_t word_value(const Word& w) {
  std::uint64_t v = 0;
  for (std::size_t i = 0; i < w.size(); ++i)
    if (w[i] == '1') v |= std::uint64_t{1} << i;
  return v;
}

Word word_of(std::uint64_t v, int len) {
  Word w(static_cast<std::size_t>(len), '0');
  for (int i = 0; i < len; ++i)
    if ((v >> i) & 1U) w[static_cast<std::size_t>(i)] = '1';
  return w;
}

void check_word(const Word& w) {
  if (w.find_first_not_of("01") != Word::npos) throw PreconditionError("cylinder word must be binary: " + w);
  if (w.size() > 62) throw PreconditionError("cylinder word too long");
}

int max_len(const Clopen& U) {
  std::size_t k = 0;
  for (const auto& w : U) k = std::max(k, w.size());
  return static_cast<int>(k);
}

// Residues mod 2^K lying in U.
std::vector<bool> residues(const Clopen& U, int K) {
  if (K > kMaxLevel) throw PreconditionError("clopen set too fine for residue arithmetic");
  const std::uint64_t m = std::uint64_t{1} << K;
  std::vector<bool> bits(m, false);
  for (const auto& w : U) {
    const std::uint64_t step = std::uint64_t{1} << w.size();
    for (std::uint64_t r = word_value(w); r < m; r += step) bits[r] = true;
  }
  return bits;
}

Clopen from_residues(const std::vector<bool>& bits, int K) {
  std::vector<Word> words;
  for (std::uint64_t r = 0; r < bits.size(); ++r)
    if (bits[r]) words.push_back(word_of(r, K));
  return make_clopen(std::move(words));
}

template <class Op>
Clopen combine(const Clopen& a, const Clopen& b, Op op) {
  const int K = std::max(max_len(a), max_len(b));
  auto x = residues(a, K);
  const auto y = residues(b, K);
  for (std::size_t i = 0; i < x.size(); ++i) x[i] = op(x[i], y[i]);
  return from_residues(x, K);
}

int two_valuation(std::int64_t t) {
  int v = 0;
  while (t % 2 == 0) {
    t /= 2;
    ++v;
  }
  return v;
}

}  // namespace

// ------------------------------------------------------------ odometer

Rational to_adic(const EventuallyPeriodic& x) {
  Integer a = 0, p = 0;
  for (std::size_t i = 0; i < x.pre().size(); ++i)
    if (x.pre()[i] == '1') a += Integer(1) << i;
  for (std::size_t i = 0; i < x.period().size(); ++i)
    if (x.period()[i] == '1') p += Integer(1) << i;
  const Integer lead = Integer(1) << x.pre().size();
  const Integer cyc = (Integer(1) << x.period().size()) - 1;
  return Rational(a) - Rational(lead * p, cyc);
}

EventuallyPeriodic from_adic(const Rational& r0) {
  if (denominator(r0) % 2 == 0) throw PreconditionError("2-adic digits need an odd denominator");
  std::map<Rational, std::size_t> seen;
  std::string digits;
  Rational r = r0;
  while (!seen.count(r)) {
    seen[r] = digits.size();
    const Integer n = numerator(r);
    const int d = n % 2 == 0 ? 0 : 1;  // b odd, so r = n/b and n agree mod 2
    digits.push_back(d ? '1' : '0');
    r = (r - d) / 2;
  }
  const auto start = seen.at(r);
  return {digits.substr(0, start), digits.substr(start)};
}

EventuallyPeriodic odometer_step(const EventuallyPeriodic& x, std::int64_t n) {
  if (n == 0) return x;
  return from_adic(to_adic(x) + Rational(n));
}

// ------------------------------------------------------------ clopen sets

Clopen make_clopen(std::vector<Word> words) {
  for (const auto& w : words) check_word(w);
  std::set<Word> s(words.begin(), words.end());
  // Drop words lying under another word of the set.
  for (auto it = s.begin(); it != s.end();) {
    bool covered = false;
    for (std::size_t k = 0; k < it->size() && !covered; ++k) covered = s.count(it->substr(0, k)) > 0;
    it = covered ? s.erase(it) : std::next(it);
  }
  bool changed = true;
  while (changed) {
    changed = false;
    for (const auto& w : s) {
      if (w.empty() || w.back() != '0') continue;
      const Word sib = w.substr(0, w.size() - 1) + '1';
      if (s.count(sib)) {
        const Word parent = w.substr(0, w.size() - 1);
        s.erase(sib);
        s.erase(w);
        s.insert(parent);
        changed = true;
        break;
      }
    }
  }
  return {s.begin(), s.end()};
}

Word translate(const Word& w, std::int64_t n) {
  check_word(w);
  const int k = static_cast<int>(w.size());
  if (k == 0) return w;
  const std::uint64_t mask = (std::uint64_t{1} << k) - 1;
  return word_of((word_value(w) + static_cast<std::uint64_t>(n)) & mask, k);
}

Clopen translate(const Clopen& U, std::int64_t n) {
  std::vector<Word> out;
  for (const auto& w : U) out.push_back(translate(w, n));
  return make_clopen(std::move(out));
}

bool contains(const Clopen& U, const EventuallyPeriodic& x) {
  return std::any_of(U.begin(), U.end(), [&](const Word& w) { return x.starts_with(w); });
}

Clopen intersect(const Clopen& a, const Clopen& b) { return combine(a, b, [](bool x, bool y) { return x && y; }); }
Clopen unite(const Clopen& a, const Clopen& b) { return combine(a, b, [](bool x, bool y) { return x || y; }); }
Clopen complement(const Clopen& a) { return combine(a, Clopen{}, [](bool x, bool) { return !x; }); }
bool disjoint(const Clopen& a, const Clopen& b) { return intersect(a, b).empty(); }
bool subset(const Clopen& a, const Clopen& b) { return intersect(a, complement(b)).empty(); }

std::string to_string(const Clopen& U) {
  std::string s = "{";
  for (std::size_t i = 0; i < U.size(); ++i) s += (i ? "," : "") + (U[i].empty() ? std::string("e") : U[i]);
  return s + "}";
}

Clopen parse_clopen(const std::string& s) {
  // Braces are optional, so to_string output parses back.
  const std::string text = s.size() >= 2 && s.front() == '{' && s.back() == '}' ? s.substr(1, s.size() - 2) : s;
  std::vector<Word> words;
  std::size_t start = 0;
  while (start <= text.size()) {
    auto end = text.find(',', start);
    if (end == std::string::npos) end = text.size();
    Word w = text.substr(start, end - start);
    if (w == "e") w.clear();
    if (w.find_first_not_of("01") != Word::npos) throw ParseError("bad cylinder word: " + w);
    words.push_back(w);
    start = end + 1;
  }
  return make_clopen(std::move(words));
}

std::vector<std::int64_t> return_set(const Clopen& U) {
  if (U.empty()) throw PreconditionError("return set of the empty set");
  const int K = max_len(U);
  const auto bits = residues(U, K);
  const auto m = static_cast<std::int64_t>(bits.size());
  std::int64_t R = 0, last = -1, first = -1;
  for (std::int64_t r = 0; r < m; ++r) {
    if (!bits[static_cast<std::size_t>(r)]) continue;
    if (last >= 0) R = std::max(R, r - last);
    else first = r;
    last = r;
  }
  R = std::max(R, first + m - last);  // wrap-around gap
  std::vector<std::int64_t> T;
  for (std::int64_t j = 0; j < R; ++j) T.push_back(j);
  return T;
}

// ------------------------------------------------------------ full group

FullGroupElement::FullGroupElement() : pieces_{{"", 0}} {}

FullGroupElement FullGroupElement::from_pieces(std::vector<Piece> pieces) {
  std::vector<Word> dom, img;
  for (const auto& p : pieces) {
    check_word(p.cylinder);
    dom.push_back(p.cylinder);
    img.push_back(translate(p.cylinder, p.shift));
  }
  if (!cantor::is_complete_prefix_code(dom)) throw PreconditionError("domain pieces do not partition the space");
  if (!cantor::is_complete_prefix_code(img)) throw PreconditionError("image pieces do not partition the space");
  std::map<Word, std::int64_t> m;
  for (const auto& p : pieces) m[p.cylinder] = p.shift;
  bool changed = true;
  while (changed) {
    changed = false;
    for (const auto& [w, s] : m) {
      if (w.empty() || w.back() != '0') continue;
      const Word parent = w.substr(0, w.size() - 1);
      auto sib = m.find(parent + '1');
      if (sib != m.end() && sib->second == s) {
        const auto shift = s;
        m.erase(sib);
        m.erase(w);
        m[parent] = shift;
        changed = true;
        break;
      }
    }
  }
  FullGroupElement f;
  f.pieces_.clear();
  for (const auto& [w, s] : m) f.pieces_.push_back({w, s});
  return f;
}

std::int64_t FullGroupElement::shift_at(const EventuallyPeriodic& x) const {
  for (const auto& p : pieces_)
    if (x.starts_with(p.cylinder)) return p.shift;
  throw PreconditionError("pieces do not cover the point");  // unreachable for valid elements
}

EventuallyPeriodic FullGroupElement::operator()(const EventuallyPeriodic& x) const {
  return odometer_step(x, shift_at(x));
}

Clopen FullGroupElement::support() const {
  std::vector<Word> w;
  for (const auto& p : pieces_)
    if (p.shift != 0) w.push_back(p.cylinder);
  return make_clopen(std::move(w));
}

std::string FullGroupElement::str() const {
  std::string s = "{";
  for (std::size_t i = 0; i < pieces_.size(); ++i) {
    const auto& p = pieces_[i];
    s += (i ? ", " : "") + (p.cylinder.empty() ? std::string("e") : p.cylinder) + ":" + (p.shift >= 0 ? "+" : "") +
         std::to_string(p.shift);
  }
  return s + "}";
}

namespace {

void compose_piece(const FullGroupElement& f, const Word& w, std::int64_t n, std::vector<Piece>& out) {
  const Word img = translate(w, n);
  for (const auto& q : f.pieces())
    if (cantor::is_prefix(q.cylinder, img)) {
      out.push_back({w, n + q.shift});
      return;
    }
  // img is a proper prefix of some piece of f: split.
  compose_piece(f, w + '0', n, out);
  compose_piece(f, w + '1', n, out);
}

}  // namespace

FullGroupElement compose(const FullGroupElement& f, const FullGroupElement& g) {
  std::vector<Piece> out;
  for (const auto& p : g.pieces()) compose_piece(f, p.cylinder, p.shift, out);
  return FullGroupElement::from_pieces(std::move(out));
}

FullGroupElement inverse(const FullGroupElement& f) {
  std::vector<Piece> out;
  for (const auto& p : f.pieces()) out.push_back({translate(p.cylinder, p.shift), -p.shift});
  return FullGroupElement::from_pieces(std::move(out));
}

FullGroupElement gamma_tv(std::int64_t t, const Clopen& V0) {
  if (t == 0) throw PreconditionError("gamma_{t,V} needs t != 0");
  const Clopen V = make_clopen(V0);
  const Clopen W = translate(V, t);
  if (!disjoint(V, W)) throw PreconditionError("not admissible: (V + t) meets V");
  std::vector<Piece> pieces;
  for (const auto& w : V) pieces.push_back({w, t});
  for (const auto& w : W) pieces.push_back({w, -t});
  for (const auto& w : complement(unite(V, W))) pieces.push_back({w, 0});
  return FullGroupElement::from_pieces(std::move(pieces));
}

std::vector<Clopen> admissible_partition(const Clopen& U, std::int64_t t) {
  if (t == 0) throw PreconditionError("admissible partition needs t != 0");
  const Clopen Ut = intersect(U, translate(U, -t));
  const int K = std::max(max_len(U), two_valuation(t < 0 ? -t : t) + 1);
  const auto bits = residues(Ut, K);
  std::vector<Clopen> out;
  for (std::uint64_t r = 0; r < bits.size(); ++r)
    if (bits[r]) out.push_back({word_of(r, K)});
  return out;
}

std::vector<FullGroupElement> restricted_generators(const Clopen& U, int step) {
  std::set<FullGroupElement> gens;
  for (std::int64_t t = -3 * step; t <= 3 * step; ++t) {
    if (t == 0) continue;
    for (const auto& V : admissible_partition(U, t)) gens.insert(gamma_tv(t, V));
  }
  return {gens.begin(), gens.end()};
}

Json to_json(const FullGroupElement& f) {
  Json j = Json::array();
  for (const auto& p : f.pieces()) j.push_back(Json::array({p.cylinder, p.shift}));
  return j;
}

FullGroupElement full_group_from_json(const Json& j) {
  try {
    std::vector<Piece> pieces;
    for (const auto& p : j) pieces.push_back({p.at(0).get<std::string>(), p.at(1).get<std::int64_t>()});
    return FullGroupElement::from_pieces(std::move(pieces));
  } catch (const Json::exception& e) {
    throw ParseError(std::string("full group JSON: ") + e.what());
  } catch (const PreconditionError& e) {
    throw ParseError(std::string("full group JSON: ") + e.what());
  }
}

}  // namespace germlab::fullgroup
