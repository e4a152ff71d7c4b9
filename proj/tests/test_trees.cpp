#include "germlab/error.hpp"
#include "germlab/par/tree_sweeps.hpp"
#include "germlab/rng.hpp"
#include "germlab/trees/levels.hpp"

#include <doctest.h>

#include <algorithm>
#include <set>

using namespace germlab;
using namespace germlab::trees;

namespace {

// Free-product arithmetic on colour words, written independently of
// ColoredTree: reduce by cancelling equal neighbours.
std::string reduce_word(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (!out.empty() && out.back() == c) out.pop_back();
    else out.push_back(c);
  }
  return out;
}

int dist(const std::string& v, const std::string& w) {
  return static_cast<int>(reduce_word(std::string(v.rbegin(), v.rend()) + w).size());
}

// sigma(g, v) read off the action on vertices only.
Perm sigma_oracle(const TreeAut& g, const Vertex& v, int n) {
  const Vertex gv = g.act_on(v);
  std::vector<int> img;
  for (int c = 0; c < n; ++c) {
    const Vertex gu = g.act_on(reduce_word(v + static_cast<char>('0' + c)));
    REQUIRE(dist(gv, gu) == 1);
    img.push_back((gu.size() > gv.size() ? gu.back() : gv.back()) - '0');
  }
  return Perm(img);
}

// b(v) = d(v, p) - d(o, p) with p the nearest ray vertex.
int busemann_oracle(const std::string& xi, const std::string& v) {
  int best = -1, best_d = 1 << 30;
  for (std::size_t i = 0; i <= xi.size(); ++i) {
    const int d = dist(v, xi.substr(0, i));
    if (d < best_d) {
      best_d = d;
      best = static_cast<int>(i);
    }
  }
  return best_d - best;
}

const Perm& stabilising(const PermGroupPair& G, Rng& rng, int a) {
  std::vector<const Perm*> ok;
  for (const auto& p : G.Fprime())
    if (p(a) == a) ok.push_back(&p);
  return *ok[rng.below(ok.size())];
}

}  // namespace

TEST_CASE("permutations") {
  const Perm c = Perm::cycle(5);
  CHECK(c.str() == "(0 1 2 3 4)");
  CHECK(Perm::parse_cycles("(0 1 2 3 4)", 5) == c);
  CHECK((c * inverse(c)).is_identity());
  const Perm t = Perm::parse_cycles("(0 1)", 5);
  CHECK((t * c)(0) == 0);  // c first: 0 -> 1, then t: 1 -> 0
  CHECK((c * t)(0) == 2);
  CHECK(t.is_even() == false);
  CHECK(c.is_even());
  CHECK(alternating_group(5).size() == 60);
  CHECK(symmetric_group(4).size() == 24);
  CHECK_THROWS_AS(Perm(std::vector<int>{0, 0, 1}), PreconditionError);
  CHECK_THROWS_AS(Perm::parse_cycles("(0 1)(1 2)", 3), ParseError);
  CHECK(to_json(c).dump() == "[1,2,3,4,0]");
}

TEST_CASE("permutation group pairs") {
  const auto G = PermGroupPair::cycle_alt(5);
  CHECK(G.F().size() == 5);
  CHECK(G.Fprime().size() == 60);
  CHECK(G.fprime_two_transitive());
  for (int a = 0; a < 5; ++a)
    for (int b = 0; b < 5; ++b) CHECK(G.f_match(a, b)(a) == b);
  CHECK_THROWS_AS(PermGroupPair::cycle_alt(4), PreconditionError);
  // <(0 1)(2 3 4)> has order 6 on 5 points: not free.
  CHECK_THROWS_AS(PermGroupPair::make({Perm::parse_cycles("(0 1)(2 3 4)", 5)}, symmetric_group(5), 5),
                  PreconditionError);
  const auto cyc = PermGroupPair::make({Perm::cycle(5)}, {Perm::cycle(5)}, 5);
  CHECK_FALSE(cyc.fprime_two_transitive());
}

TEST_CASE("coloured tree") {
  const ColoredTree T{5};
  const auto B = T.ball(5);
  CHECK(B.size() == 1706);  // 1 + 5 (4^5 - 1) / 3
  CHECK(std::set<Vertex>(B.begin(), B.end()).size() == B.size());
  CHECK(T.step("01", 1) == "0");
  CHECK(T.step("01", 2) == "012");
  Rng rng(3);
  for (int i = 0; i < 200; ++i) {
    const auto& v = B[rng.below(B.size())];
    const auto& w = B[rng.below(B.size())];
    CHECK(T.distance(v, w) == dist(v, w));
    Vertex x = v;
    for (int c : T.path(v, w)) x = T.step(x, c);
    CHECK(x == w);
  }
  CHECK(T.parse("o").empty());
  CHECK_THROWS_AS(T.parse("0110"), ParseError);
}

TEST_CASE("identity and constant-default elements") {
  const auto ctx = GffContext::standard();
  const TreeAut e;
  for (const auto& v : ctx->tree.ball(3)) CHECK(e.act_on(v) == v);
  const TreeAut r = TreeAut::make(ctx, "", Perm::cycle(5), {});
  for (const auto& v : ctx->tree.ball(4)) CHECK(r.local_perm(v) == Perm::cycle(5));
  CHECK(r.act_on("01") == "12");
}

TEST_CASE("well-formedness of exception maps") {
  const auto ctx = GffContext::standard();
  const Perm p = Perm::parse_cycles("(1 2 3)", 5);  // fixes 0
  // At "0" the parent pushes colour 0 to 0, and p agrees.
  CHECK_NOTHROW(TreeAut::make(ctx, "", Perm::identity(5), {{"0", p}}));
  // At "1" the parent pushes 1 to 1 but p sends 1 to 2.
  CHECK_THROWS_AS(TreeAut::make(ctx, "", Perm::identity(5), {{"1", p}}), PreconditionError);
  CHECK_THROWS_AS(TreeAut::make(ctx, "", Perm::parse_cycles("(0 1)", 5), {}), PreconditionError);
  CHECK_THROWS_AS(TreeAut::make(ctx, "00", Perm::identity(5), {}), PreconditionError);
  // Exceptions that already lie in F are dropped.
  const auto g = TreeAut::make(ctx, "", Perm::identity(5), {{"0", Perm::identity(5)}});
  CHECK(g.is_identity());
}

TEST_CASE("local permutations agree with the action") {
  const auto ctx = GffContext::standard();
  Rng rng(11);
  const auto B = ctx->tree.ball(3);
  for (int i = 0; i < 100; ++i) {
    const auto g = random_tree_aut(ctx, rng, 3, 4);
    for (const auto& v : B) {
      REQUIRE(g.local_perm(v) == sigma_oracle(g, v, 5));
      CHECK(g.act_inverse(g.act_on(v)) == v);
      CHECK(ctx->groups.in_Fprime(g.local_perm(v)));
      if (!g.exceptions().count(v)) CHECK(ctx->groups.in_F(g.local_perm(v)));
    }
  }
}

TEST_CASE("cocycle identity on the depth-5 ball") {
  const auto ctx = GffContext::standard();
  const auto B = ctx->tree.ball(5);
  const auto B2 = ctx->tree.ball(2);
  Rng rng(2024);
  std::size_t bad = 0;
  for (int i = 0; i < 500; ++i) {
    const auto g = random_tree_aut(ctx, rng, 3, 4);
    const auto h = random_tree_aut(ctx, rng, 3, 4);
    bad += par::cocycle_violations(g, h, B);
    const auto gh = g * h;
    for (const auto& v : B2) CHECK(gh.act_on(v) == g.act_on(h.act_on(v)));
    // Closure: exceptions of gh come from h^-1 exc(g), exc(h) and o.
    std::set<Vertex> allowed{""};
    for (const auto& kv : h.exceptions()) allowed.insert(kv.first);
    for (const auto& kv : g.exceptions()) allowed.insert(h.act_inverse(kv.first));
    for (const auto& kv : gh.exceptions()) CHECK(allowed.count(kv.first));
    CHECK(ctx->groups.in_F(gh.default_perm()));
    if (i < 20) CHECK(par::cocycle_violations_serial(g, h, B) == 0);
  }
  CHECK(bad == 0);
}

TEST_CASE("group laws") {
  const auto ctx = GffContext::standard();
  Rng rng(5);
  const auto B = ctx->tree.ball(3);
  for (int i = 0; i < 100; ++i) {
    const auto f = random_tree_aut(ctx, rng, 2, 3);
    const auto g = random_tree_aut(ctx, rng, 2, 3);
    const auto h = random_tree_aut(ctx, rng, 2, 3);
    CHECK((f * g) * h == f * (g * h));
    CHECK((g * inverse(g)).is_identity());
    CHECK((inverse(g) * g).is_identity());
    CHECK(g * TreeAut() == g);
    for (const auto& v : B) CHECK(inverse(g).act_on(v) == g.act_inverse(v));
  }
}

TEST_CASE("tree automorphism JSON") {
  const auto ctx = GffContext::standard();
  const Perm p = Perm::parse_cycles("(1 2 3)", 5);
  const auto g = TreeAut::make(ctx, "1", Perm::identity(5), {{"0", p}});
  CHECK(to_json(g).dump() ==
        R"({"base_image":"1","default":[0,1,2,3,4],"exceptions":{"0":[0,2,3,1,4]}})");
  CHECK(tree_aut_from_json(ctx, to_json(g)) == g);
  Rng rng(8);
  for (int i = 0; i < 50; ++i) {
    const auto x = random_tree_aut(ctx, rng, 3, 4);
    CHECK(tree_aut_from_json(ctx, Json::parse(to_json(x).dump())) == x);
  }
  CHECK_THROWS_AS(tree_aut_from_json(ctx, Json::parse(R"({"base_image":"11","default":[0,1,2,3,4]})")), ParseError);
}

TEST_CASE("Busemann levels") {
  const ColoredTree T{5};
  const Vertex xi = "012340";
  const auto B = T.ball(4);
  for (const auto& v : B) {
    const int k = busemann(T, xi, v);
    REQUIRE(k == busemann_oracle(xi, v));
    int lower = 0;
    for (int c = 0; c < 5; ++c)
      if (busemann_oracle(xi, T.step(v, c)) == k - 1) ++lower;
    CHECK(lower == 1);
    CHECK(busemann_oracle(xi, lower_neighbour(T, xi, v)) == k - 1);
  }
  CHECK(busemann(T, xi, xi) == -6);
  CHECK_THROWS_AS(busemann(T, xi, xi + "1"), PreconditionError);
  CHECK_THROWS_AS(lower_neighbour(T, xi, xi), PreconditionError);
}

TEST_CASE("elliptic germs") {
  const auto ctx = GffContext::standard();
  const auto& G = ctx->groups;

  SUBCASE("identity fixes the half-tree at the first edge") {
    const auto r = elliptic_germ_check(TreeAut(), "0123", 4);
    CHECK(r.fixes_half_tree);
    CHECK(r.edge_index == 0);
    CHECK(r.edge_to == "0");
    CHECK(r.verified);
    CHECK(r.checked == 1 + 4 + 16 + 64);
    CHECK_FALSE(elliptic_germ_check(TreeAut(), "", 4).fixes_half_tree);
  }

  SUBCASE("exception within radius 2, ray vertex fixed at distance 3") {
    // Fixator of the half-tree behind the edge "01" -> "012", twisting at "01".
    const Perm p = Perm::parse_cycles("(0 1 3)", 5);  // fixes 2
    const auto g = half_tree_fixator(ctx, "01", 2, p);
    CHECK(g.exception_radius() == 2);
    const auto r = elliptic_germ_check(g, "0123", 5);
    CHECK(r.fixes_half_tree);
    CHECK(r.edge_from == "01");
    CHECK(r.edge_to == "012");
    CHECK(r.verified);
    CHECK_FALSE(elliptic_germ_check(g, "01", 5).fixes_half_tree);  // pending
  }

  SUBCASE("an F-default element is not elliptic along a ray") {
    const auto g = TreeAut::make(ctx, "", Perm::cycle(5), {});
    CHECK_THROWS_AS(elliptic_germ_check(g, "0123", 4), PreconditionError);
  }

  SUBCASE("products of half-tree fixators") {
    Rng rng(77);
    const auto B2 = ctx->tree.ball(2);
    for (int i = 0; i < 50; ++i) {
      Vertex ray;
      while (ray.size() < 10) {
        const char c = static_cast<char>('0' + rng.below(5));
        if (ray.empty() || ray.back() != c) ray.push_back(c);
      }
      TreeAut g;
      const auto k = rng.between(1, 3);
      for (int j = 0; j < k; ++j) {
        const auto& m = B2[rng.below(B2.size())];
        const int a = ctx->tree.path(m, ray).front();
        g = half_tree_fixator(ctx, m, a, stabilising(G, rng, a)) * g;
      }
      // Pulled-back exceptions of later factors can sit deeper than 2.
      REQUIRE(g.exception_radius() < 9);
      const auto r = elliptic_germ_check(g, ray, 10);
      REQUIRE(r.fixes_half_tree);
      CHECK(r.verified);
      CHECK(r.edge_index >= g.exception_radius());
      // Oracle: three levels of the half-tree, enumerated as words.
      std::vector<Vertex> layer{r.edge_to};
      for (int d = 0; d < 3; ++d) {
        std::vector<Vertex> next;
        for (const auto& u : layer) {
          CHECK(g.act_on(u) == u);
          for (char c = '0'; c < '5'; ++c)
            if (u.back() != c) next.push_back(u + c);
        }
        layer = std::move(next);
      }
    }
  }
}

TEST_CASE("level transitivity witnesses") {
  const auto ctx = GffContext::standard();
  const Vertex xi = "01234";
  const auto& T = ctx->tree;

  CHECK(level_transitivity_witness(ctx, xi, "2", "2", 4).steps.empty());

  // "2" and "3" are both children of o, level 1, distance 2.
  const auto w2 = level_transitivity_witness(ctx, xi, "2", "3", 4);
  REQUIRE(w2.steps.size() == 1);
  CHECK(w2.verified);
  CHECK(w2.steps[0].exceptions().size() == 1);
  CHECK(w2.steps[0].exceptions().count(""));
  CHECK(w2.steps[0].act_on("2") == "3");

  // "21" and "31": distance 4 through o.
  const auto w4 = level_transitivity_witness(ctx, xi, "21", "31", 4);
  CHECK(w4.verified);
  CHECK(w4.steps.size() <= 2);
  CHECK(T.distance(w4.trail.back(), "31") == 0);

  // o and "03" are both at level 0 with midpoint "0" on the ray.
  CHECK(busemann(T, xi, "1") == 1);
  CHECK(busemann(T, xi, "03") == 0);
  CHECK(busemann(T, xi, "") == 0);
  const auto wr = level_transitivity_witness(ctx, xi, "", "03", 4);
  CHECK(wr.verified);
  CHECK(wr.steps.size() == 1);
  CHECK(wr.steps[0].act_on(xi) == xi);

  CHECK_THROWS_AS(level_transitivity_witness(ctx, xi, "1", "03", 4), PreconditionError);
  CHECK_THROWS_AS(level_transitivity_witness(ctx, xi, "2", "3", 5), PreconditionError);
  const auto cyc = GffContext::make(PermGroupPair::make({Perm::cycle(5)}, {Perm::cycle(5)}, 5));
  CHECK_THROWS_AS(level_transitivity_witness(cyc, xi, "2", "3", 4), Infeasible);
}

TEST_CASE("all level pairs at distance <= 4 in the depth-4 ball") {
  const auto ctx = GffContext::standard();
  const auto par_sweep = par::level_pairs(ctx, "01234", 4, 4);
  const auto ser_sweep = par::level_pairs_serial(ctx, "01234", 4, 4);
  CHECK(par_sweep.pairs > 0);
  CHECK(par_sweep.verified == par_sweep.pairs);
  CHECK(par_sweep.max_steps == 2);
  CHECK(par_sweep.pairs == ser_sweep.pairs);
  CHECK(par_sweep.verified == ser_sweep.verified);
  CHECK(par_sweep.max_steps == ser_sweep.max_steps);
}
