#include "germlab/circle/thompson.hpp"
#include "germlab/error.hpp"
#include "germlab/rng.hpp"

#include <doctest.h>

using namespace germlab;
using namespace germlab::circle;

namespace {

Dyadic d(const char* s) { return Dyadic::parse(s); }
Rational r(long long p, long long q = 1) { return Rational(p, q); }

std::string random_word(Rng& rng, std::string_view alphabet, int max_len) {
  std::string w;
  const auto len = rng.between(0, max_len);
  for (int i = 0; i < len; ++i) w.push_back(alphabet[rng.below(alphabet.size())]);
  return w;
}

// Oracle for membership in [F,F]: slopes at 0+ and 1- are 1, read straight
// from the first and last piece.
bool derived_by_slopes(const PLMap& f) {
  return f.in_F() && f.pieces().front().slope_exp == 0 && f.pieces().back().slope_exp == 0;
}

}  // namespace

TEST_CASE("standard generators") {
  CHECK(in_F(gen_A()));
  CHECK(in_F(gen_B()));
  CHECK_FALSE(in_F(gen_C()));
  CHECK(in_T(gen_C()));
  CHECK(gen_A()(d("1/2")) == d("1/4"));
  CHECK(gen_A()(d("3/4")) == d("1/2"));
  CHECK(gen_C()(d("0")) == d("3/4"));
  CHECK(gen_C()(d("1/2")) == d("0"));
  CHECK(gen_A().pieces().size() == 3);
}

TEST_CASE("group law examples") {
  CHECK((gen_A() * inverse(gen_A())).is_identity());
  CHECK(gen_A() * gen_B() != gen_B() * gen_A());
  // Probe that separates AB from BA.
  const Dyadic x = d("3/4");
  CHECK(gen_A()(gen_B()(x)) != gen_B()(gen_A()(x)));
  CHECK(word(Group::T, "cCaA").is_identity());
  CHECK(word(Group::F, "ab") == gen_A() * gen_B());
  CHECK_THROWS_AS(word(Group::F, "c"), ParseError);
  // C has order 3 in T (it permutes three standard intervals cyclically).
  CHECK(word(Group::T, "ccc").is_identity());
}

TEST_CASE("lift and preimage are consistent") {
  Rng rng(5);
  for (int i = 0; i < 100; ++i) {
    const PLMap f = word(Group::T, random_word(rng, "abcABC", 8));
    const Dyadic x = Dyadic::normalize(Integer(rng.between(0, 1023)), 10);
    CHECK(f.preimage(f(x)) == x);
    CHECK(inverse(f)(f(x)) == x);
  }
}

TEST_CASE("group axioms on random words") {
  Rng rng(17);
  for (int i = 0; i < 150; ++i) {
    const PLMap f = word(Group::T, random_word(rng, "abcABC", 6));
    const PLMap g = word(Group::T, random_word(rng, "abcABC", 6));
    const PLMap h = word(Group::T, random_word(rng, "abcABC", 6));
    CHECK((f * g) * h == f * (g * h));
    CHECK((f * inverse(f)).is_identity());
    CHECK(f * PLMap() == f);
    CHECK(in_T(f * g));
    const PLMap u = word(Group::F, random_word(rng, "abAB", 6));
    const PLMap v = word(Group::F, random_word(rng, "abAB", 6));
    CHECK(in_F(u * v));
  }
}

TEST_CASE("germ data") {
  const GermData a0 = germ_data(gen_A(), r(0));
  CHECK(a0.fixes_point);
  CHECK(a0.right.slope_exp == -1);
  CHECK(a0.left.slope_exp == 1);
  CHECK_FALSE(a0.right.identity);
  CHECK_FALSE(in_derived_F(gen_A()));
  CHECK_FALSE(in_derived_F(gen_B()));
  const GermData id = germ_data(PLMap(), r(1, 3));
  CHECK(id.left.identity);
  CHECK(id.right.identity);
  CHECK(in_derived_F(commutator(gen_A(), gen_B())));
}

TEST_CASE("random commutators lie in [F,F]") {
  Rng rng(3);
  for (int i = 0; i < 60; ++i) {
    const PLMap g = word(Group::F, random_word(rng, "abAB", 5));
    const PLMap h = word(Group::F, random_word(rng, "abAB", 5));
    const PLMap c = commutator(g, h);
    CHECK(in_derived_F(c));
    CHECK(derived_by_slopes(c));
    const PLMap w = word(Group::F, random_word(rng, "abAB", 6));
    CHECK(in_derived_F(w) == derived_by_slopes(w));
  }
}

TEST_CASE("support and fixed set") {
  const SupportFix id = support_fix(PLMap());
  CHECK(id.support.empty());
  CHECK(id.fixed_arcs == Region{Arc::full()});

  const SupportFix a = support_fix(gen_A());
  CHECK(a.fixed_points == std::vector<Rational>{r(0)});
  CHECK(a.fixed_arcs.empty());
  CHECK(a.support == Region{Arc::full()});
  CHECK(a.moved == Region{Arc{r(0), r(1), false}});

  const SupportFix b = support_fix(gen_B());
  CHECK(b.fixed_arcs == Region{Arc{r(0), r(1, 2), true}});
  CHECK(b.support == Region{Arc{r(1, 2), r(1), true}});

  // 4x - 1 style pieces have non-dyadic fixed points.
  const PLMap f = word(Group::F, "aab");
  for (const auto& p : support_fix(f).fixed_points) CHECK(f(p) == p);
}

TEST_CASE("support and fixed set partition the circle") {
  Rng rng(41);
  for (int i = 0; i < 80; ++i) {
    const PLMap f = word(Group::T, random_word(rng, "abcABC", 7));
    const SupportFix s = support_fix(f);
    for (int k = 0; k < 64; ++k) {
      const Rational x(rng.between(0, 9999), 10000);
      const bool moved = region_contains(s.moved, x);
      const bool fixed = region_contains(s.fixed_arcs, x) ||
                         std::find(s.fixed_points.begin(), s.fixed_points.end(), x) != s.fixed_points.end();
      CHECK(moved != fixed);
      CHECK(moved == (f(x) != x));
      if (moved) CHECK(region_contains(s.support, x));
    }
  }
}

TEST_CASE("rigid stabilizers") {
  const auto gens = rigid_stabilizer_gens(d("1/4"), d("1/2"));
  REQUIRE(gens.size() == 2);
  const Region box{Arc{r(1, 4), r(1, 2), true}};
  for (const auto& g : gens) {
    CHECK(in_F(g));
    CHECK(support_inside(g, box));
    CHECK(g(d("1/8")) == d("1/8"));
    CHECK(g(d("3/4")) == d("3/4"));
  }
  // The affine conjugate of A sends 1/4 + 1/8 to 1/4 + 1/16.
  CHECK(gens[0](d("3/8")) == d("5/16"));
  CHECK_THROWS_AS(rigid_stabilizer_gens(d("1/2"), d("1/4")), PreconditionError);
}

TEST_CASE("dyadic bridge") {
  const auto pieces = dyadic_bridge(d("1/4"), d("3/4"), d("7/64"), d("57/64"));
  CHECK(pieces.front().left == d("1/4"));
  CHECK(pieces.front().apply(d("1/4")) == d("7/64"));
  for (std::size_t i = 0; i + 1 < pieces.size(); ++i)
    CHECK(pieces[i].apply(pieces[i + 1].left) == pieces[i + 1].apply(pieces[i + 1].left));
  CHECK(pieces.back().apply(d("3/4")) == d("57/64"));
  CHECK(dyadic_between(r(1, 3), r(1, 2)) == d("3/8"));
}

TEST_CASE("compress: printed construction") {
  const Region C{Arc::make(r(3, 4), r(1, 4), true)};
  const Arc target = Arc::make(r(7, 8), r(1, 8), false);
  const Compression c = compress(C, target);
  CHECK(c.n == 2);
  CHECK(in_derived_F(c.map));
  CHECK(region_inside(c.map.image(C), Region{target}));
  CHECK(c.map(d("1/4")) == d("7/64"));
  CHECK(c.map(d("3/4")) == d("57/64"));
  CHECK(c.map(d("1/32")) == d("1/32"));
}

TEST_CASE("compress: point and nesting") {
  const Region point{Arc::point(r(1, 2))};
  CHECK(compress(point, Arc::make(r(1, 4), r(1, 8), false)).map.is_identity());  // ]1/4, 1/8[ runs through 1/2 and 0
  const Arc small = Arc::make(r(15, 16), r(1, 16), false);
  const Compression c = compress(point, small);
  CHECK(small.contains(c.map(r(1, 2))));

  const Region C{Arc::make(r(5, 8), r(1, 8), true)};
  const Arc t1 = Arc::make(r(3, 4), r(1, 4), false);
  const Arc t2 = Arc::make(r(31, 32), r(1, 32), false);
  const Compression g1 = compress(C, t1);
  const Region C2 = g1.map.image(C);
  const Compression g2 = compress(C2, t2);
  CHECK(region_inside((g2.map * g1.map).image(C), Region{t2}));
  CHECK(in_derived_F(g2.map * g1.map));

  CHECK_THROWS_AS(compress(Region{Arc::full()}, t1), Infeasible);
  CHECK_THROWS_AS(compress(C, Arc::make(r(1, 4), r(1, 2), false)), PreconditionError);
}

TEST_CASE("JSON round trip for PL maps") {
  const PLMap f = word(Group::T, "abCa");
  CHECK(plmap_from_json(to_json(f)) == f);
  Json bad = to_json(gen_A());
  bad[1]["slope_exp"] = 1;
  CHECK_THROWS_AS(plmap_from_json(bad), ParseError);
}
