#include "germlab/error.hpp"
#include "germlab/exact/dyadic.hpp"
#include "germlab/exact/json.hpp"
#include "germlab/exact/quad.hpp"
#include "germlab/exact/rational.hpp"

#include <boost/functional/hash.hpp>

namespace germlab {

namespace mp = boost::multiprecision;

std::string to_string(const Rational& x) {
  if (mp::denominator(x) == 1) return mp::numerator(x).str();
  return mp::numerator(x).str() + "/" + mp::denominator(x).str();
}

Rational parse_rational(const std::string& text) {
  try {
    const auto slash = text.find('/');
    if (slash == std::string::npos) return Rational(Integer(text));
    Integer p(text.substr(0, slash));
    Integer q(text.substr(slash + 1));
    if (q == 0) throw ParseError("zero denominator in '" + text + "'");
    return Rational(p, q);
  } catch (const ParseError&) {
    throw;
  } catch (const std::exception&) {
    throw ParseError("not a rational number: '" + text + "'");
  }
}

// ---------------------------------------------------------------- Dyadic

Dyadic Dyadic::normalize(Integer numerator, std::int64_t exponent) {
  Dyadic d;
  if (numerator == 0) return d;
  if (exponent < 0) {
    d.num_ = numerator << static_cast<unsigned>(-exponent);
    return d;
  }
  if (exponent > 0) {
    const auto tz = static_cast<std::int64_t>(mp::lsb(mp::abs(numerator)));
    const auto cut = std::min(tz, exponent);
    numerator >>= static_cast<unsigned>(cut);
    exponent -= cut;
  }
  d.num_ = std::move(numerator);
  d.exp_ = static_cast<std::uint32_t>(exponent);
  return d;
}

Dyadic Dyadic::pow2(std::int64_t k) {
  if (k >= 0) return Dyadic(Integer(1) << static_cast<unsigned>(k));
  return normalize(Integer(1), -k);
}

Dyadic Dyadic::shifted(std::int64_t k) const {
  return normalize(num_, static_cast<std::int64_t>(exp_) - k);
}

Integer Dyadic::floor() const {
  if (exp_ == 0) return num_;
  if (num_ >= 0) return num_ >> exp_;
  Integer m = -num_;
  return -((m + (Integer(1) << exp_) - 1) >> exp_);
}

Rational Dyadic::to_rational() const { return Rational(num_, Integer(1) << exp_); }

namespace {

// Brings both numerators to the larger exponent.
std::pair<Integer, Integer> aligned(const Dyadic& a, const Dyadic& b, std::uint32_t& e) {
  e = std::max(a.exponent(), b.exponent());
  return {a.numerator() << (e - a.exponent()), b.numerator() << (e - b.exponent())};
}

}  // namespace

Dyadic operator+(const Dyadic& a, const Dyadic& b) {
  std::uint32_t e = 0;
  auto [x, y] = aligned(a, b, e);
  return Dyadic::normalize(x + y, e);
}

Dyadic operator-(const Dyadic& a, const Dyadic& b) {
  std::uint32_t e = 0;
  auto [x, y] = aligned(a, b, e);
  return Dyadic::normalize(x - y, e);
}

Dyadic operator*(const Dyadic& a, const Dyadic& b) {
  // Product of odd numerators stays odd, so only zero needs care.
  return Dyadic::normalize(a.num_ * b.num_, static_cast<std::int64_t>(a.exp_) + b.exp_);
}

Dyadic Dyadic::operator-() const {
  Dyadic d = *this;
  d.num_ = -d.num_;
  return d;
}

std::strong_ordering operator<=>(const Dyadic& a, const Dyadic& b) {
  std::uint32_t e = 0;
  auto [x, y] = aligned(a, b, e);
  if (x < y) return std::strong_ordering::less;
  if (x > y) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

std::string Dyadic::str() const {
  if (exp_ == 0) return num_.str();
  return num_.str() + "/" + (Integer(1) << exp_).str();
}

Dyadic Dyadic::parse(const std::string& text) {
  const Rational r = parse_rational(text);
  if (!is_dyadic(r)) throw ParseError("not a dyadic rational: '" + text + "'");
  return to_dyadic(r);
}

std::size_t Dyadic::hash() const {
  std::size_t seed = exp_;
  boost::hash_combine(seed, mp::hash_value(num_));
  return seed;
}

bool is_dyadic(const Rational& x) {
  const Integer& q = mp::denominator(x);
  return (q & (q - 1)) == 0;
}

Dyadic to_dyadic(const Rational& x) {
  if (!is_dyadic(x)) throw DomainError("rational " + to_string(x) + " is not dyadic");
  const auto e = static_cast<std::int64_t>(mp::lsb(mp::denominator(x)));
  return Dyadic::normalize(mp::numerator(x), e);
}

// ---------------------------------------------------------------- QuadExt

int QuadExt::sign() const {
  const int sa = a_.sign();
  const int sb = b_.sign();
  if (sa >= 0 && sb >= 0) return (sa > 0 || sb > 0) ? 1 : 0;
  if (sa <= 0 && sb <= 0) return -1;
  // Opposite signs: |a| vs |b| sqrt 2 decided by a^2 vs 2 b^2.
  const Rational lhs = a_ * a_;
  const Rational rhs = 2 * b_ * b_;
  const int mag = lhs > rhs ? 1 : -1;  // equality is impossible, sqrt 2 is irrational
  return sa > 0 ? mag : -mag;
}

QuadExt QuadExt::inverse() const {
  if (is_zero()) throw DomainError("inverse of zero in Q(sqrt 2)");
  const Rational n = norm();
  return {a_ / n, -b_ / n};
}

std::string QuadExt::str() const {
  if (b_ == 0) return to_string(a_);
  std::string s = a_ == 0 ? std::string() : to_string(a_) + (b_ > 0 ? "+" : "");
  return s + to_string(b_) + "*r2";
}

QuadExt QuadExt::parse(const std::string& text) {
  const auto star = text.find("*r2");
  if (star == std::string::npos) return QuadExt(parse_rational(text));
  if (star + 3 != text.size()) throw ParseError("trailing text after *r2 in '" + text + "'");
  // The sign splitting the two parts is the last +/- not at the start.
  std::size_t split = std::string::npos;
  for (std::size_t i = 1; i < star; ++i)
    if ((text[i] == '+' || text[i] == '-') && text[i - 1] != '/') split = i;
  if (split == std::string::npos) return {Rational(0), parse_rational(text.substr(0, star))};
  const std::string b = text.substr(text[split] == '+' ? split + 1 : split, star - (text[split] == '+' ? split + 1 : split));
  return {parse_rational(text.substr(0, split)), parse_rational(b)};
}

// ---------------------------------------------------------------- JSON

Json to_json(const Dyadic& d) { return Json{{"num", d.numerator().str()}, {"den_exp", d.exponent()}}; }

Dyadic dyadic_from_json(const Json& j) {
  try {
    return Dyadic::normalize(Integer(j.at("num").get<std::string>()), j.at("den_exp").get<std::int64_t>());
  } catch (const std::exception& e) {
    throw ParseError(std::string("bad Dyadic JSON: ") + e.what());
  }
}

Json to_json(const Rational& r) {
  return Json::array({mp::numerator(r).str(), mp::denominator(r).str()});
}

Rational rational_from_json(const Json& j) {
  try {
    Integer q(j.at(1).get<std::string>());
    if (q == 0) throw ParseError("zero denominator");
    return Rational(Integer(j.at(0).get<std::string>()), q);
  } catch (const ParseError&) {
    throw;
  } catch (const std::exception& e) {
    throw ParseError(std::string("bad rational JSON: ") + e.what());
  }
}

Json to_json(const QuadExt& x) { return Json{{"a", to_json(x.a())}, {"b", to_json(x.b())}}; }

QuadExt quad_from_json(const Json& j) {
  return {rational_from_json(j.at("a")), rational_from_json(j.at("b"))};
}

}  // namespace germlab
