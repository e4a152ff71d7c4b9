#include "germlab/cantor/prefix_map.hpp"
#include "germlab/error.hpp"
#include "germlab/rng.hpp"

#include <doctest.h>

#include <set>

using namespace germlab;
using namespace germlab::cantor;

namespace {

std::string random_word(Rng& rng, std::string_view alphabet, int max_len) {
  std::string w;
  const auto len = rng.between(0, max_len);
  for (int i = 0; i < len; ++i) w.push_back(alphabet[rng.below(alphabet.size())]);
  return w;
}

Word random_bits(Rng& rng, int min_len, int max_len) {
  Word w;
  const auto len = rng.between(min_len, max_len);
  for (int i = 0; i < len; ++i) w.push_back(rng.coin() ? '1' : '0');
  return w;
}

EventuallyPeriodic random_point(Rng& rng) { return {random_bits(rng, 0, 6), random_bits(rng, 1, 4)}; }

// Germ oracle working only from point evaluations: x' = x with digit k
// flipped differs from x first at position k, so these points approach x.
// A neighbourhood is fixed iff some C_{x[:k]} maps onto itself identically.
std::string germ_oracle(const PrefixMap& g, const EventuallyPeriodic& x) {
  if (g(x) != x) return "moves_x";
  for (std::size_t k = 0; k < 40; ++k) {
    const Word c = x.prefix(k);
    if (g.image(c) == std::vector<Word>{c}) return "fixes_neighbourhood";
  }
  for (std::size_t k = 20; k < 40; ++k) {
    Word head = x.prefix(k);
    head.push_back(x.at(k) == '0' ? '1' : '0');
    const EventuallyPeriodic y = x.drop(k + 1).prepend(head);
    if (g(y) == y) return "unclassified";
  }
  return "isolated_fixed_point";
}

// Every fixed point of g: the unique solution of wy = zy on each moving
// rule, plus a few points inside identity rules.
std::vector<EventuallyPeriodic> fixed_points(const PrefixMap& g, Rng& rng) {
  std::vector<EventuallyPeriodic> out;
  for (const auto& [w, z] : g.rules()) {
    if (w == z) {
      out.push_back(random_point(rng).prepend(w));
    } else if (z.size() > w.size() && is_prefix(w, z)) {
      out.emplace_back(w, z.substr(w.size()));
    } else if (w.size() > z.size() && is_prefix(z, w)) {
      out.emplace_back(w, w.substr(z.size()));
    }
  }
  return out;
}

}  // namespace

TEST_CASE("eventually periodic sequences") {
  CHECK(EventuallyPeriodic("0", "10") == EventuallyPeriodic("", "01"));
  CHECK(EventuallyPeriodic("11", "1") == EventuallyPeriodic("", "1"));
  CHECK(EventuallyPeriodic("", "0101") == EventuallyPeriodic("", "01"));
  CHECK(EventuallyPeriodic::parse("0(10)").str() == "(01)");
  CHECK(EventuallyPeriodic::parse("01(10)").str() == "01(10)");
  CHECK(EventuallyPeriodic::parse("1,0") == EventuallyPeriodic("1", "0"));
  CHECK(EventuallyPeriodic::parse("1") == EventuallyPeriodic("1", "0"));
  const EventuallyPeriodic x("110", "01");
  CHECK(x.prefix(7) == "1100101");
  CHECK(x.drop(4) == EventuallyPeriodic("", "10"));
  CHECK(x.drop(4).prepend("1100") == x);
  CHECK_THROWS_AS(EventuallyPeriodic::parse("1(2)"), ParseError);
}

TEST_CASE("prefix map basics") {
  CHECK(compose(swap(), swap()).is_identity());
  const PrefixMap f = PrefixMap::from_rules({{"00", "0"}, {"01", "10"}, {"1", "11"}});
  CHECK(is_complete_prefix_code({"00", "01", "1"}));
  CHECK(is_complete_prefix_code({"0", "10", "11"}));
  CHECK(f.evaluate_on("00") == "0");
  CHECK(f.evaluate_on("0110") == "1010");
  CHECK_THROWS_AS(f.evaluate_on("0"), NeedsRefinement);
  CHECK(f.image("0") == std::vector<Word>{"0", "10"});
  CHECK_FALSE(is_complete_prefix_code({"0", "01", "1"}));
  CHECK_FALSE(is_complete_prefix_code({"00", "1"}));
  CHECK_THROWS_AS(PrefixMap::from_rules({{"0", "0"}, {"1", "0"}}), PreconditionError);
  // Sibling merge: {00->10, 01->11, 1->0} is the swap.
  CHECK(PrefixMap::from_rules({{"00", "10"}, {"01", "11"}, {"1", "0"}}) == swap());
  CHECK(PrefixMap::from_rules({{"0", "0"}, {"1", "1"}}).is_identity());
}

TEST_CASE("standard generators of V") {
  CHECK(word("ccc").is_identity());
  CHECK(word("pp").is_identity());
  CHECK(word("aA").is_identity());
  CHECK(word("ab") == compose(gen_A(), gen_B()));
  CHECK(word("ab") != word("ba"));
  CHECK_THROWS_AS(word("x"), ParseError);
  // A contracts C_0 toward 0^inf.
  CHECK(gen_A().evaluate_on("0") == "00");
}

TEST_CASE("group axioms and Kraft sums on random words") {
  Rng rng(11);
  for (int i = 0; i < 150; ++i) {
    const PrefixMap f = word(random_word(rng, "abcpABCP", 8));
    const PrefixMap g = word(random_word(rng, "abcpABCP", 8));
    const PrefixMap h = word(random_word(rng, "abcpABCP", 8));
    CHECK((f * g) * h == f * (g * h));
    CHECK((f * inverse(f)).is_identity());
    CHECK(f * PrefixMap() == f);
    const PrefixMap fg = f * g;
    std::vector<Word> dom, ran;
    for (const auto& [w, z] : fg.rules()) {
      dom.push_back(w);
      ran.push_back(z);
    }
    CHECK(is_complete_prefix_code(dom));
    CHECK(is_complete_prefix_code(ran));
    const EventuallyPeriodic x = random_point(rng);
    CHECK(fg(x) == f(g(x)));
    CHECK(inverse(f)(f(x)) == x);
  }
}

TEST_CASE("reduction is confluent under random refinement schedules") {
  Rng rng(23);
  for (int i = 0; i < 120; ++i) {
    const PrefixMap f = word(random_word(rng, "abcpABCP", 7));
    const PrefixMap g = word(random_word(rng, "abcpABCP", 7));
    auto fr = f.rules();
    auto gr = g.rules();
    for (int round = rng.between(1, 4); round > 0; --round) {
      std::vector<Word> pick_f, pick_g;
      for (const auto& r : fr)
        if (rng.coin()) pick_f.push_back(r.first);
      for (const auto& r : gr)
        if (rng.coin()) pick_g.push_back(r.first);
      fr = refine(fr, pick_f);
      gr = refine(gr, pick_g);
    }
    CHECK(reduce(compose_rules(fr, gr)) == (f * g).rules());
  }
}

TEST_CASE("germ class examples") {
  const EventuallyPeriodic zero("", "0");
  CHECK(germ_class(PrefixMap(), zero) == GermClass::fixes_neighbourhood);
  CHECK(germ_class(swap(), zero) == GermClass::moves_x);
  CHECK(germ_class(gen_A(), zero) == GermClass::isolated_fixed_point);
  CHECK(germ_class(gen_B(), zero) == GermClass::fixes_neighbourhood);
  // A fixes 1^inf too: 11y -> 1y.
  CHECK(germ_class(gen_A(), EventuallyPeriodic("", "1")) == GermClass::isolated_fixed_point);
}

TEST_CASE("Hausdorff germ dichotomy on 200 fixed points") {
  Rng rng(29);
  int checked = 0;
  std::set<std::string> seen;
  while (checked < 200) {
    const PrefixMap g = word(random_word(rng, "abcpABCP", 7));
    for (const auto& x : fixed_points(g, rng)) {
      if (checked == 200) break;
      REQUIRE(g(x) == x);
      const GermClass c = germ_class(g, x);
      CHECK(c != GermClass::moves_x);
      CHECK(germ_oracle(g, x) == to_string(c));
      seen.insert(std::string(to_string(c)));
      ++checked;
    }
  }
  CHECK(seen.size() == 2);
}

TEST_CASE("compress_v") {
  const PrefixMap g = compress_v("0", "11");
  CHECK(compresses(g, "0", "11"));
  for (const auto& c : g.image("1")) CHECK(is_prefix("11", c));
  CHECK(compress_v("01", "").is_identity());
  CHECK_THROWS_AS(compress_v("", "0"), PreconditionError);

  Rng rng(31);
  for (int i = 0; i < 50; ++i) {
    const Word w = random_bits(rng, 1, 6);
    const Word u = rng.coin() ? w : random_bits(rng, 1, 6);
    const PrefixMap h = compress_v(w, u);
    CHECK(compresses(h, w, u));
    // Independent check on points: anything outside C_w lands in C_u.
    for (int k = 0; k < 10; ++k) {
      const EventuallyPeriodic x = random_point(rng);
      if (!x.starts_with(w)) CHECK(h(x).starts_with(u));
    }
  }
}

TEST_CASE("rigid stabilizers of cylinders") {
  CHECK(prefix_translate(swap(), "0") == PrefixMap::from_rules({{"00", "01"}, {"01", "00"}, {"1", "1"}}));
  const Word c = "10";
  const auto gens = rigid_stabilizer_v(c);
  CHECK(gens.size() == 4);
  for (const auto& g : gens) {
    for (const Word d : {"0", "11", "00", "111", "010"}) CHECK(g.evaluate_on(d) == d);
    for (const auto& s : g.support()) CHECK(is_prefix(c, s));
  }
  CHECK(prefix_translate(word("abP"), c) == gens[0] * gens[1] * inverse(gens[3]));
}

TEST_CASE("JSON round trip for prefix maps") {
  const PrefixMap f = PrefixMap::from_rules({{"00", "0"}, {"01", "10"}, {"1", "11"}});
  CHECK(to_json(f).dump() == R"({"rules":[["00","0"],["01","10"],["1","11"]]})");
  CHECK(prefix_map_from_json(to_json(word("abcP"))) == word("abcP"));
  CHECK_THROWS_AS(prefix_map_from_json(Json::parse(R"({"rules":[["0","1"]]})")), ParseError);
}
