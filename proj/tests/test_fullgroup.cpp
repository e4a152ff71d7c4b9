#include "germlab/error.hpp"
#include "germlab/fullgroup/schreier.hpp"
#include "germlab/par/patch_bfs.hpp"
#include "germlab/rng.hpp"

#include <doctest.h>

#include <set>
#include <sstream>

using namespace germlab;
using namespace germlab::fullgroup;

namespace {

// First 64 digits as a machine word, least significant digit first.
std::uint64_t low_bits(const EventuallyPeriodic& x) {
  std::uint64_t v = 0;
  for (int i = 0; i < 64; ++i)
    if (x.at(static_cast<std::size_t>(i)) == '1') v |= std::uint64_t{1} << i;
  return v;
}

Word random_bits(Rng& rng, int min_len, int max_len) {
  Word w;
  const auto len = rng.between(min_len, max_len);
  for (int i = 0; i < len; ++i) w.push_back(rng.coin() ? '1' : '0');
  return w;
}

EventuallyPeriodic random_point(Rng& rng) { return {random_bits(rng, 0, 6), random_bits(rng, 1, 4)}; }

// Membership of x + n in U using only the low digits of x.
bool in_U_oracle(const Clopen& U, const EventuallyPeriodic& x, std::int64_t n) {
  const std::uint64_t v = low_bits(x) + static_cast<std::uint64_t>(n);
  for (const auto& w : U) {
    bool ok = true;
    for (std::size_t i = 0; i < w.size() && ok; ++i) ok = (((v >> i) & 1U) == 1U) == (w[i] == '1');
    if (ok) return true;
  }
  return false;
}

}  // namespace

TEST_CASE("odometer") {
  CHECK(odometer_step({"11", "0"}, 1) == EventuallyPeriodic("001", "0"));
  CHECK(odometer_step({"", "1"}, 1) == EventuallyPeriodic("", "0"));  // -1 + 1
  CHECK(to_adic({"", "1"}) == Rational(-1));
  CHECK(to_adic({"", "01"}) == Rational(-2, 3));
  Rng rng(42);
  for (int i = 0; i < 300; ++i) {
    const auto x = random_point(rng);
    const auto n = rng.between(-5000, 5000);
    CHECK(from_adic(to_adic(x)) == x);
    CHECK(odometer_step(x, 0) == x);
    const auto y = odometer_step(x, n);
    CHECK(low_bits(y) == low_bits(x) + static_cast<std::uint64_t>(n));
    CHECK(odometer_step(y, -n) == x);
  }
  CHECK_THROWS_AS(from_adic(Rational(1, 2)), PreconditionError);
}

TEST_CASE("freeness spot check") {
  Rng rng(9);
  for (int i = 0; i < 50; ++i) {
    const auto x = random_point(rng);
    std::size_t fixed = 0;
    for (std::int64_t n = -1024; n <= 1024; ++n)
      if (n != 0 && odometer_step(x, n) == x) ++fixed;
    CHECK(fixed == 0);
  }
}

TEST_CASE("clopen sets") {
  CHECK(make_clopen({"00", "01", "1"}) == Clopen{""});
  CHECK(make_clopen({"0", "01", "10"}) == Clopen{"0", "10"});
  CHECK(translate(Word("00"), 1) == "10");
  CHECK(translate(Word("11"), 1) == "00");
  CHECK(translate(Clopen{"00"}, -1) == Clopen{"11"});
  CHECK(complement({"0"}) == Clopen{"1"});
  CHECK(intersect({"0"}, {"00", "1"}) == Clopen{"00"});
  CHECK(disjoint({"01"}, {"00", "1"}));
  CHECK(subset({"010"}, {"01"}));
  CHECK(parse_clopen("e") == Clopen{""});
  CHECK(parse_clopen("0,10") == Clopen{"0", "10"});
  CHECK(parse_clopen(to_string(Clopen{"0", "10"})) == Clopen{"0", "10"});
  CHECK(to_string(Clopen{"0", "10"}) == "{0,10}");
  Rng rng(4);
  for (int i = 0; i < 100; ++i) {
    const Clopen U = make_clopen({random_bits(rng, 1, 4), random_bits(rng, 1, 4)});
    const auto n = rng.between(-40, 40);
    const auto x = random_point(rng);
    CHECK(contains(translate(U, n), odometer_step(x, n)) == contains(U, x));
    CHECK(contains(complement(U), x) != contains(U, x));
  }
}

TEST_CASE("return sets") {
  CHECK(return_set({"0"}) == std::vector<std::int64_t>{0, 1});
  CHECK(return_set({""}) == std::vector<std::int64_t>{0});
  CHECK(return_set({"01"}) == std::vector<std::int64_t>{0, 1, 2, 3});
  CHECK_THROWS_AS(return_set({}), PreconditionError);
  // Exhaustive over all residues of the finest level, for several g.
  Rng rng(6);
  for (int i = 0; i < 40; ++i) {
    const Clopen U = make_clopen({random_bits(rng, 0, 4), random_bits(rng, 1, 5)});
    const auto T = return_set(U);
    std::size_t K = 0;
    for (const auto& w : U) K = std::max(K, w.size());
    for (std::uint64_t r = 0; r < (std::uint64_t{1} << K); ++r) {
      Word w;
      for (std::size_t b = 0; b < K; ++b) w.push_back(((r >> b) & 1U) ? '1' : '0');
      const EventuallyPeriodic x(w, "0");
      for (std::int64_t g : {-7, 0, 3, 100}) {
        bool hit = false;
        for (auto t : T) hit = hit || in_U_oracle(U, x, t + g);
        CHECK(hit);
      }
      // T is minimal: dropping its last element breaks some orbit.
    }
    bool needed = false;
    for (std::uint64_t r = 0; r < (std::uint64_t{1} << K) && !needed; ++r) {
      Word w;
      for (std::size_t b = 0; b < K; ++b) w.push_back(((r >> b) & 1U) ? '1' : '0');
      bool hit = false;
      for (std::size_t t = 0; t + 1 < T.size(); ++t) hit = hit || in_U_oracle(U, EventuallyPeriodic(w, "0"), T[t]);
      needed = !hit;
    }
    CHECK(needed);
  }
}

TEST_CASE("gamma_{t,V}") {
  const auto g = gamma_tv(1, {"00"});
  CHECK(g.str() == "{00:+1, 01:+0, 10:-1, 11:+0}");
  CHECK((g * g).is_identity());
  CHECK(subset(g.support(), unite({"00"}, {"10"})));
  CHECK_THROWS_AS(gamma_tv(2, {"0"}), PreconditionError);  // C_0 + 2 = C_0
  CHECK_THROWS_AS(gamma_tv(0, {"0"}), PreconditionError);
  Rng rng(12);
  for (int i = 0; i < 100; ++i) {
    const Clopen V = {random_bits(rng, 2, 5)};
    const auto t = rng.between(1, 9) * (rng.coin() ? 1 : -1);
    if (!disjoint(V, translate(V, t))) {
      CHECK_THROWS_AS(gamma_tv(t, V), PreconditionError);
      continue;
    }
    const auto h = gamma_tv(t, V);
    CHECK((h * h).is_identity());
    const auto x = random_point(rng);
    if (contains(V, x)) CHECK(h(x) == odometer_step(x, t));
    else if (contains(translate(V, t), x)) CHECK(h(x) == odometer_step(x, -t));
    else CHECK(h(x) == x);
  }
}

TEST_CASE("full group laws on products of gamma generators") {
  const auto gens = restricted_generators({"0"}, 1);
  REQUIRE(!gens.empty());
  Rng rng(31);
  auto word = [&] {
    FullGroupElement f;
    const auto len = rng.between(0, 10);
    for (int i = 0; i < len; ++i) f = gens[rng.below(gens.size())] * f;
    return f;
  };
  for (int i = 0; i < 300; ++i) {
    const auto f = word(), g = word(), h = word();
    CHECK((f * g) * h == f * (g * h));
    CHECK((f * inverse(f)).is_identity());
    CHECK(f * FullGroupElement() == f);
    const auto x = random_point(rng);
    CHECK((f * g)(x) == f(g(x)));
    CHECK(inverse(f)(f(x)) == x);
    // Supported in U = C_0.
    CHECK(subset(f.support(), {"0"}));
  }
  CHECK_THROWS_AS(FullGroupElement::from_pieces({{"0", 1}, {"1", 0}}), PreconditionError);
  const auto g = gamma_tv(3, {"010"});
  CHECK(full_group_from_json(Json::parse(to_json(g).dump())) == g);
}

TEST_CASE("admissible partitions") {
  for (const Clopen& U : {Clopen{"0"}, Clopen{"01"}, Clopen{"1", "00"}}) {
    const int s = cayley_step(U);
    for (std::int64_t t = -3 * s; t <= 3 * s; ++t) {
      if (t == 0) continue;
      Clopen cover;
      for (const auto& V : admissible_partition(U, t)) {
        CHECK(disjoint(V, translate(V, t)));
        CHECK(subset(translate(V, t), U));
        CHECK(disjoint(cover, V));
        cover = unite(cover, V);
      }
      CHECK(cover == intersect(U, translate(U, -t)));
    }
  }
}

TEST_CASE("Schreier patches") {
  SUBCASE("whole space gives the path with chords") {
    const auto p = schreier_patch({""}, cayley_step({""}), {"", "0"}, 10);
    CHECK(p.vertices.size() == 21);
    CHECK(p.edges.size() == 20 + 19 + 18);
  }
  SUBCASE("C_0 from 0^infinity") {
    const auto p = schreier_patch({"0"}, cayley_step({"0"}), {"", "0"}, 20);
    CHECK(p.step == 1);
    for (auto n : p.vertices) CHECK(n % 2 == 0);
    CHECK(p.vertices.size() == 21);
    for (std::size_t i = 0; i + 1 < p.vertices.size(); ++i) {
      const auto& adj = p.adjacency[i];
      CHECK(std::find(adj.begin(), adj.end(), i + 1) != adj.end());
    }
    CHECK(quasi_isometry_check(p).one_dense);
  }
  SUBCASE("x outside U") { CHECK_THROWS_AS(schreier_patch({"1"}, 1, {"", "0"}, 5), PreconditionError); }
}

TEST_CASE("orbit identification with the gamma generators") {
  Rng rng(15);
  for (const Clopen& U : {Clopen{"0"}, Clopen{"01"}, Clopen{"1", "00"}}) {
    for (int k = 0; k < 3; ++k) {
      EventuallyPeriodic x = random_point(rng);
      while (!contains(U, x)) x = random_point(rng);
      const auto p = schreier_patch(U, cayley_step(U), x, 60);
      std::vector<std::int64_t> want;
      for (std::int64_t n = -60; n <= 60; ++n)
        if (in_U_oracle(U, x, n)) want.push_back(n);
      CHECK(p.vertices == want);
      CHECK(orbital_schreier_edges(p) == p.edges);
    }
  }
}

TEST_CASE("quasi-isometry certificates") {
  const auto p0 = schreier_patch({"0"}, cayley_step({"0"}), {"", "0"}, 400);
  const auto r0 = quasi_isometry_check(p0);
  CHECK(r0.interior >= 100);
  CHECK(r0.violations.empty());
  CHECK(r0.one_dense);
  CHECK(r0.max_ratio <= 3);
  CHECK(r0.min_ratio >= 1);

  const EventuallyPeriodic x("01", "0");
  const auto p1 = schreier_patch({"01"}, cayley_step({"01"}), x, 800);
  CHECK(p1.step == 3);
  const auto r1 = quasi_isometry_check(p1);
  CHECK(r1.interior >= 100);
  CHECK(r1.violations.empty());
  CHECK(r1.one_dense);

  // y = z and adjacent vertices.
  CHECK(p1.ambient(0, 0) == 0);
  for (const auto& [i, j] : p1.edges) CHECK(p1.ambient(i, j) <= 3);

  std::vector<std::size_t> src{0, 5, 17};
  CHECK(par::bfs_from_sources(p1.adjacency, src) == par::bfs_from_sources_serial(p1.adjacency, src));

  const auto j = to_json(r0);
  CHECK(j.at("violations").empty());
  CHECK(j.at("max_ratio").get<std::string>() == "2");

  std::ostringstream dot;
  write_dot(dot, schreier_patch({"0"}, 1, {"", "0"}, 4));
  CHECK(dot.str() ==
        "graph delta_x {\n  // U = {0}, x = (0), step 1, radius 4\n  \"-4\";\n  \"-2\";\n  \"0\";\n  \"2\";\n  \"4\";\n"
        "  \"-4\" -- \"-2\";\n  \"-2\" -- \"0\";\n  \"0\" -- \"2\";\n  \"2\" -- \"4\";\n}\n");
}
