#include "germlab/error.hpp"
#include "germlab/exact/dyadic.hpp"
#include "germlab/exact/json.hpp"
#include "germlab/exact/quad.hpp"
#include "germlab/rng.hpp"

#include <doctest.h>

using namespace germlab;

namespace {

Rational q(long long p, long long r = 1) { return Rational(p, r); }

// Independent oracle: brackets a + b sqrt2 using integer square roots of
// 2 * 4^k, refining until the sign is certain.
int sign_by_refinement(const QuadExt& x) {
  if (x.is_zero()) return 0;
  for (unsigned k = 4;; k += 8) {
    const Integer scale = Integer(1) << k;
    const Integer root = boost::multiprecision::sqrt(Integer(2) * scale * scale);
    const Rational lo_r(root, scale), hi_r(root + 1, scale);  // lo_r < sqrt2 < hi_r
    const Rational u = x.a() + x.b() * (x.b() >= 0 ? lo_r : hi_r);
    const Rational v = x.a() + x.b() * (x.b() >= 0 ? hi_r : lo_r);
    if (u > 0) return 1;
    if (v < 0) return -1;
  }
}

QuadExt random_quad(Rng& rng) {
  auto r = [&] { return Rational(rng.between(-60, 60), rng.between(1, 12)); };
  return {r(), r()};
}

}  // namespace

TEST_CASE("normalize produces canonical dyadics") {
  CHECK(Dyadic::normalize(8, 3) == Dyadic(1));
  CHECK(Dyadic::normalize(8, 3).exponent() == 0);
  CHECK(Dyadic::normalize(0, 5) == Dyadic(0));
  CHECK(Dyadic::normalize(0, 5).exponent() == 0);
  CHECK(Dyadic::normalize(6, 1) == Dyadic(3));
  CHECK(Dyadic::normalize(3, 2).str() == "3/4");
  CHECK(Dyadic::normalize(-12, 4).str() == "-3/4");
}

TEST_CASE("normalize is idempotent") {
  Rng rng(7);
  for (int i = 0; i < 200; ++i) {
    const auto d = Dyadic::normalize(Integer(rng.between(-4096, 4096)), rng.between(0, 12));
    CHECK(Dyadic::normalize(d.numerator(), d.exponent()) == d);
  }
}

TEST_CASE("dyadic ring operations agree with rationals") {
  Rng rng(11);
  for (int i = 0; i < 300; ++i) {
    const auto x = Dyadic::normalize(Integer(rng.between(-500, 500)), rng.between(0, 9));
    const auto y = Dyadic::normalize(Integer(rng.between(-500, 500)), rng.between(0, 9));
    const auto z = Dyadic::normalize(Integer(rng.between(-500, 500)), rng.between(0, 9));
    CHECK((x + y).to_rational() == x.to_rational() + y.to_rational());
    CHECK((x * y).to_rational() == x.to_rational() * y.to_rational());
    CHECK((x - y).to_rational() == x.to_rational() - y.to_rational());
    CHECK((x * (y + z)) == x * y + x * z);
    CHECK(((x + y) + z) == (x + (y + z)));
    CHECK(((x < y) == (x.to_rational() < y.to_rational())));
    CHECK(Rational(x.floor()) == floor(x.to_rational()));
  }
}

TEST_CASE("dyadic parsing") {
  CHECK(Dyadic::parse("3/8") == Dyadic::normalize(3, 3));
  CHECK(Dyadic::parse("-5") == Dyadic(-5));
  CHECK(Dyadic::parse("4/8") == Dyadic::normalize(1, 1));
  CHECK_THROWS_AS(Dyadic::parse("1/3"), ParseError);
  CHECK_THROWS_AS(Dyadic::parse("x"), ParseError);
  CHECK(Dyadic::pow2(-3) == Dyadic::normalize(1, 3));
  CHECK(Dyadic::normalize(5, 2).shifted(3) == Dyadic(10));
}

TEST_CASE("quadratic field examples") {
  const QuadExt r2 = QuadExt::sqrt2();
  CHECK((r2 - 1) * (r2 + 1) == QuadExt(1));
  // (5/2 - 1)^2 = 9/4 > 2 * 1^2, so 1 + sqrt2 < 5/2.
  CHECK(QuadExt(q(1), q(1)) < QuadExt(q(5, 2)));
  CHECK(r2.inverse() == QuadExt(q(0), q(1, 2)));
  CHECK_THROWS_AS(QuadExt(0).inverse(), DomainError);
  CHECK(QuadExt(q(-7, 5), q(1)).sign() == 1);   // sqrt2 > 1.4
  CHECK(QuadExt(q(-3, 2), q(1)).sign() == -1);  // sqrt2 < 1.5
}

TEST_CASE("quadratic sign agrees with interval refinement of sqrt 2") {
  Rng rng(2024);
  for (int i = 0; i < 1000; ++i) {
    const QuadExt x = random_quad(rng), y = random_quad(rng);
    const int expected = sign_by_refinement(x - y);
    const auto c = x <=> y;
    CHECK((c < 0) == (expected < 0));
    CHECK((c > 0) == (expected > 0));
  }
}

TEST_CASE("quadratic field axioms hold exactly") {
  Rng rng(99);
  for (int i = 0; i < 200; ++i) {
    const QuadExt x = random_quad(rng), y = random_quad(rng), z = random_quad(rng);
    CHECK((x * y) * z == x * (y * z));
    CHECK(x * (y + z) == x * y + x * z);
    CHECK((x + y) + z == x + (y + z));
    if (!x.is_zero()) CHECK(x * x.inverse() == QuadExt(1));
  }
}

TEST_CASE("scalar JSON round trip") {
  const Dyadic d = Dyadic::normalize(Integer("123456789012345678901234567890123"), 7);
  CHECK(to_json(d)["num"] == d.numerator().str());
  CHECK(dyadic_from_json(to_json(d)) == d);
  const QuadExt x(q(-3, 7), q(22, 5));
  CHECK(quad_from_json(to_json(x)) == x);
  CHECK(to_json(x).dump() == R"({"a":["-3","7"],"b":["22","5"]})");
  CHECK_THROWS_AS(dyadic_from_json(Json{{"num", "abc"}, {"den_exp", 1}}), ParseError);
}

TEST_CASE("QuadExt parsing inverts str") {
  const QuadExt x(Rational(-3, 7), Rational(22, 5));
  CHECK(QuadExt::parse(x.str()) == x);
  CHECK(QuadExt::parse("1/2") == QuadExt(Rational(1, 2)));
  CHECK(QuadExt::parse("-1*r2") == -QuadExt::sqrt2());
  CHECK(QuadExt::parse("2-1/3*r2") == QuadExt(Rational(2), Rational(-1, 3)));
  CHECK_THROWS_AS(QuadExt::parse("1*r2x"), ParseError);
}
