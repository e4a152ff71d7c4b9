#include "germlab/error.hpp"
#include "germlab/suites/suites.hpp"

#include <doctest.h>

using namespace germlab;
using namespace germlab::suites;

namespace {

// Small configurations so the whole registry runs in a few seconds.
Config small(const std::string& suite) {
  if (suite == "pl-axioms") return {{"words", "20"}};
  if (suite == "germ-ff") return {{"commutators", "20"}};
  if (suite == "compress") return {{"instances", "10"}};
  if (suite == "chabauty-net") return {{"radius", "2"}, {"net", "6"}};
  if (suite == "neumann") return {{"n_max", "6"}, {"r_max", "3"}};
  if (suite == "micro-support") return {{"instances", "10"}, {"instances_v", "5"}};
  if (suite == "v-germs") return {{"instances", "20"}};
  if (suite == "gff-cocycle") return {{"pairs", "20"}, {"depth", "3"}, {"elliptic", "5"}};
  if (suite == "gff-levels") return {{"depth", "2"}, {"max_distance", "2"}};
  if (suite == "fullgroup-qi") return {{"radius_c0", "200"}, {"radius_c01", "400"}, {"margin", "40"}};
  if (suite == "proj-bn") return {{"words", "20"}, {"n_max", "4"}};
  return {};
}

}  // namespace

TEST_CASE("every registered suite passes on a small configuration") {
  CHECK(suite_names().size() == 11);
  for (const auto& name : suite_names()) {
    CAPTURE(name);
    const auto r = run_suite(name, small(name), 7);
    CHECK(r.suite == name);
    CHECK_FALSE(r.checks.empty());
    CHECK(r.all_pass());
    CHECK(std::is_sorted(r.checks.begin(), r.checks.end(),
                         [](const CheckRecord& a, const CheckRecord& b) { return a.id < b.id; }));
    for (const auto& c : r.checks) CHECK(c.id.starts_with(name + "/"));
  }
}

TEST_CASE("reports are byte-identical across reruns") {
  for (const auto& name : {"pl-axioms", "compress", "gff-cocycle", "v-germs"}) {
    CAPTURE(name);
    const auto a = to_json(run_suite(name, small(name), 3)).dump();
    const auto b = to_json(run_suite(name, small(name), 3)).dump();
    CHECK(a == b);
  }
  // A different seed draws different instances; the v-germ class counts show it.
  CHECK(to_json(run_suite("v-germs", small("v-germs"), 3)).dump() !=
        to_json(run_suite("v-germs", small("v-germs"), 4)).dump());
}

TEST_CASE("report schema") {
  const auto j = to_json(run_suite("neumann", {{"n_max", "4"}}, 1));
  CHECK(j["schema"] == kReportSchema);
  CHECK(j["config"] == Json{{"n_max", "4"}, {"r_max", "4"}});
  CHECK(j["summary"]["pass"] == 3);
  CHECK(j["summary"]["fail"] == 0);
  for (const auto& c : j["checks"]) {
    CHECK(c.contains("anchor"));
    CHECK(c["status"] == "pass");
  }
  CHECK(default_config("neumann") == Config{{"n_max", "8"}, {"r_max", "4"}});
}

TEST_CASE("unknown suites and bad configs") {
  CHECK_THROWS_AS(run_suite("bogus", {}, 1), UnknownSuite);
  CHECK_THROWS_AS(default_config("bogus"), UnknownSuite);
  CHECK_THROWS_WITH_AS(run_suite("neumann", {{"n_maxx", "3"}}, 1), doctest::Contains("n_maxx"), ConfigError);
  CHECK_THROWS_WITH_AS(run_suite("neumann", {{"r_max", "0"}}, 1), doctest::Contains("r_max"), ConfigError);
  CHECK_THROWS_WITH_AS(run_suite("neumann", {{"n_max", "3x"}}, 1), doctest::Contains("n_max"), ConfigError);
  CHECK_THROWS_WITH_AS(run_suite("gff-cocycle", {{"fprime", "psl"}}, 1), doctest::Contains("fprime"), ConfigError);
  CHECK_THROWS_WITH_AS(run_suite("gff-cocycle", {{"omega", "4"}}, 1), doctest::Contains("omega"), ConfigError);
  CHECK_THROWS_WITH_AS(run_suite("gff-levels", {{"xi", "0110"}}, 1), doctest::Contains("xi"), ConfigError);
}

TEST_CASE("parse_config") {
  const auto c = parse_config("# radii\nradius_c0 = 200\n\n  margin=40   # inner band\n");
  CHECK(c == Config{{"margin", "40"}, {"radius_c0", "200"}});
  CHECK_THROWS_WITH_AS(parse_config("a = 1\nnonsense\n"), doctest::Contains("line 2"), ParseError);
  CHECK_THROWS_AS(parse_config(" = 3"), ParseError);
}

TEST_CASE("a failing check replays to the same failure") {
  // F' = F is not 2-transitive, so level transitivity is reported as failed.
  const auto r = run_suite("gff-levels", {{"fprime", "cycle"}, {"depth", "2"}}, 5);
  CHECK_FALSE(r.all_pass());
  const auto j = to_json(r);
  const auto c = replay(j, "gff-levels/transitivity");
  CHECK(c.status == Status::fail);
  CHECK(c.witness == j["checks"][0]["witness"]);
}

TEST_CASE("replay of passing checks and bad ids") {
  const auto j = to_json(run_suite("compress", small("compress"), 11));
  for (const auto& rec : j["checks"]) {
    const auto c = replay(j, rec["id"]);
    CHECK(to_string(c.status) == rec["status"].get<std::string>());
    CHECK(c.witness == rec["witness"]);
  }
  CHECK_THROWS_AS(replay(j, "compress/nothing"), ParseError);
  CHECK_THROWS_AS(replay(Json{{"suite", "compress"}}, "compress/v"), ParseError);
}
