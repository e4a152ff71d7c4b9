// germlab: command-line front end for the verification suites and the
// individual kernels.

#include "germlab/cantor/prefix_map.hpp"
#include "germlab/circle/thompson.hpp"
#include "germlab/dynamics/neumann.hpp"
#include "germlab/dynamics/probes.hpp"
#include "germlab/error.hpp"
#include "germlab/fullgroup/schreier.hpp"
#include "germlab/proj/lodha_moore.hpp"
#include "germlab/suites/suites.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

using namespace germlab;
namespace su = germlab::suites;

namespace {

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  std::istringstream in(s);
  while (std::getline(in, cur, sep)) out.push_back(cur);
  return out;
}

std::pair<std::string, std::string> pair_arg(const std::string& s, const std::string& what) {
  const auto p = split(s, ',');
  if (p.size() != 2) throw ParseError(what + " expects two comma-separated values, got '" + s + "'");
  return {p[0], p[1]};
}

void emit(const Json& j, const std::string& out) {
  if (out.empty() || out == "-") {
    std::cout << j.dump(2) << "\n";
    return;
  }
  std::ofstream f(out);
  if (!f) throw Error("cannot write " + out);
  f << j.dump(2) << "\n";
}

// ------------------------------------------------------------ eval

int cmd_eval(const std::string& group, const std::string& word, const std::string& at, const std::string& cyl) {
  if (group == "F" || group == "T") {
    const auto f = circle::word(group == "F" ? circle::Group::F : circle::Group::T, word);
    Json j{{"group", group}, {"word", word}, {"map", to_json(f)}};
    if (!at.empty()) j["image"] = f(Dyadic::parse(at)).str();
    emit(j, "");
    return 0;
  }
  if (group == "V") {
    const auto f = cantor::word(word);
    Json j{{"group", group}, {"word", word}, {"map", to_json(f)}};
    if (!cyl.empty() || !at.empty()) {
      if (!cyl.empty()) j["image"] = f.image(cyl == "e" ? "" : cyl);
      if (!at.empty()) j["point_image"] = f(cantor::EventuallyPeriodic::parse(at)).str();
    }
    emit(j, "");
    return 0;
  }
  if (group == "LM") {
    const auto f = proj::lm_word(word);
    Json j{{"group", group}, {"word", word}, {"map", to_json(f)}, {"continuous", proj::is_continuous(f)}};
    if (!at.empty()) j["image"] = proj::to_string(f(proj::PPoint(QuadExt::parse(at))));
    emit(j, "");
    return 0;
  }
  throw ParseError("--group must be F, T, V or LM");
}

// ------------------------------------------------------------ compress

int cmd_compress(const std::vector<std::string>& arcs, const std::string& target, const std::string& w,
                 const std::string& u) {
  if (!w.empty() || !u.empty()) {
    const auto g = cantor::compress_v(w == "e" ? "" : w, u == "e" ? "" : u);
    const bool ok = cantor::compresses(g, w == "e" ? "" : w, u == "e" ? "" : u);
    emit(Json{{"map", to_json(g)}, {"compresses", ok}}, "");
    return ok ? 0 : 1;
  }
  circle::Region C;
  for (const auto& a : arcs) {
    const auto [lo, hi] = pair_arg(a, "--c");
    C.push_back(circle::Arc::make(Dyadic::parse(lo).to_rational(), Dyadic::parse(hi).to_rational(), true));
  }
  const auto [b, a] = pair_arg(target, "--target");
  const auto T = circle::Arc::make(Dyadic::parse(b).to_rational(), Dyadic::parse(a).to_rational(), false);
  const auto c = circle::compress(C, T);
  const bool inside = circle::region_inside(c.map.image(C), circle::Region{T});
  const bool derived = circle::in_derived_F(c.map);
  emit(Json{{"map", to_json(c.map)},
            {"gap", Json::array({c.gap_left.str(), c.gap_right.str()})},
            {"n", c.n},
            {"inside_target", inside},
            {"in_derived_F", derived}},
       "");
  return inside && derived ? 0 : 1;
}

int cmd_compress_proj(const std::string& i1, const std::string& i2, int max_len) {
  auto interval = [](const std::string& s, const std::string& what) {
    const auto [lo, hi] = pair_arg(s, what);
    return proj::Interval{QuadExt::parse(lo), QuadExt::parse(hi)};
  };
  const auto I1 = interval(i1, "--i1"), I2 = interval(i2, "--i2");
  const auto w = proj::interval_compression_witness(I1, I2, max_len);
  Json j{{"i1", I1.str()}, {"i2", I2.str()}, {"max_len", max_len}};
  if (!w) {
    j["word"] = nullptr;
    emit(j, "");
    return 1;
  }
  const auto f = proj::lm_word(*w);
  j["word"] = *w;
  j["map"] = to_json(f);
  emit(j, "");
  return 0;
}

// ------------------------------------------------------------ chabauty

// Subgroup specs: whole | trivial | derived | support:<lo>,<hi> |
// germ:<x>[,<x>...]. For V, support takes cylinders and germ takes
// eventually periodic points.
dynamics::SubgroupSpec<circle::PLMap> circle_spec(const std::string& s) {
  using namespace dynamics;
  if (s == "whole") return whole<circle::PLMap>();
  if (s == "trivial") return trivial<circle::PLMap>();
  if (s == "derived") return identity_germ_spec({Rational(0)});
  if (s.starts_with("support:")) {
    const auto [lo, hi] = pair_arg(s.substr(8), "support");
    return support_inside_spec(circle::Region{circle::Arc::make(parse_rational(lo), parse_rational(hi), true)});
  }
  if (s.starts_with("germ:")) {
    std::vector<Rational> pts;
    for (const auto& x : split(s.substr(5), ',')) pts.push_back(parse_rational(x));
    return identity_germ_spec(pts);
  }
  throw ParseError("unknown subgroup spec '" + s + "'");
}

dynamics::SubgroupSpec<cantor::PrefixMap> cantor_spec(const std::string& s) {
  using namespace dynamics;
  if (s == "whole") return whole<cantor::PrefixMap>();
  if (s == "trivial") return trivial<cantor::PrefixMap>();
  if (s.starts_with("support:")) return support_inside_spec(split(s.substr(8), ','));
  if (s.starts_with("germ:")) {
    std::vector<cantor::EventuallyPeriodic> pts;
    for (const auto& x : split(s.substr(5), ';')) pts.push_back(cantor::EventuallyPeriodic::parse(x));
    return identity_germ_spec(pts);
  }
  throw ParseError("unknown subgroup spec '" + s + "'");
}

template <class E>
Json chabauty_report(const dynamics::MarkedGroup<E>& G, const dynamics::SubgroupSpec<E>& h,
                     const dynamics::SubgroupSpec<E>& k, int radius) {
  const auto b = dynamics::ball(G, radius);
  std::optional<par::Entry<E>> w;
  const int r = dynamics::chabauty_agree_radius(h, k, b, &w);
  Json witnesses = Json::array();
  if (w) witnesses.push_back(w->word.empty() ? "id" : w->word);
  return Json{{"group", G.name}, {"h", h.name}, {"k", k.name}, {"ball", b.size()}, {"agree_radius", r},
              {"witness_elements", witnesses}};
}

int cmd_chabauty(const std::string& group, const std::string& h, const std::string& k, int radius) {
  if (group == "F") emit(chabauty_report(dynamics::group_F(), circle_spec(h), circle_spec(k), radius), "");
  else if (group == "F-e") emit(chabauty_report(dynamics::group_F_marked_e(), circle_spec(h), circle_spec(k), radius), "");
  else if (group == "T") emit(chabauty_report(dynamics::group_T(), circle_spec(h), circle_spec(k), radius), "");
  else if (group == "V") emit(chabauty_report(dynamics::group_V(), cantor_spec(h), cantor_spec(k), radius), "");
  else throw ParseError("--group must be F, F-e, T or V");
  return 0;
}

// ------------------------------------------------------------ schreier

int cmd_schreier(const std::string& u, const std::string& x, int radius, const std::string& out) {
  const auto U = fullgroup::parse_clopen(u);
  const auto [pre, per] = pair_arg(x, "--x");
  const cantor::EventuallyPeriodic pt(pre == "e" ? "" : pre, per);
  const auto p = fullgroup::schreier_patch(U, fullgroup::cayley_step(U), pt, radius);
  const auto rep = fullgroup::quasi_isometry_check(p);
  if (!out.empty()) {
    std::ofstream f(out);
    if (!f) throw Error("cannot write " + out);
    fullgroup::write_dot(f, p);
  }
  Json j = to_json(rep);
  j["vertices"] = p.vertices.size();
  j["edges"] = p.edges.size();
  j["step"] = p.step;
  emit(j, "");
  return rep.violations.empty() && rep.one_dense ? 0 : 1;
}

// ------------------------------------------------------------ suites

int print_report(const su::SuiteReport& r, const std::string& out) {
  emit(to_json(r), out);
  if (!out.empty() && out != "-")
    for (const auto& c : r.checks) std::cerr << su::to_string(c.status) << "  " << c.id << "\n";
  return r.all_pass() ? 0 : 1;
}

su::Config read_config(const std::string& file, const std::vector<std::string>& sets) {
  su::Config cfg;
  if (!file.empty()) {
    std::ifstream in(file);
    if (!in) throw ParseError("cannot read config file " + file);
    std::stringstream ss;
    ss << in.rdbuf();
    cfg = su::parse_config(ss.str());
  }
  for (const auto& s : sets) {
    const auto eq = s.find('=');
    if (eq == std::string::npos) throw ParseError("--set expects key=value, got '" + s + "'");
    cfg[s.substr(0, eq)] = s.substr(eq + 1);
  }
  return cfg;
}

int cmd_verify(const std::string& suite, std::uint64_t seed, const su::Config& cfg, const std::string& out) {
  if (suite != "all") return print_report(su::run_suite(suite, cfg, seed), out);
  if (!cfg.empty()) throw ConfigError("config overrides need a single suite");
  Json all = Json::array();
  bool ok = true;
  for (const auto& name : su::suite_names()) {
    const auto r = su::run_suite(name, {}, seed);
    ok = ok && r.all_pass();
    all.push_back(to_json(r));
    std::cerr << (r.all_pass() ? "pass" : "FAIL") << "  " << name << "\n";
  }
  emit(all, out);
  return ok ? 0 : 1;
}

int cmd_tree_verify(int omega, const std::string& f, const std::string& fprime, const std::string& which,
                    std::uint64_t seed) {
  if (f != "cycle") throw ConfigError("--f: only the regular cyclic group 'cycle' is available");
  su::Config cfg{{"omega", std::to_string(omega)}, {"fprime", fprime}};
  std::string suite = "gff-cocycle", keep;
  if (which == "cocycle") {
    cfg["elliptic"] = "0";
    keep = "gff-cocycle/cocycle";
  } else if (which == "germ") {
    cfg["pairs"] = "1";
    keep = "gff-cocycle/elliptic";
  } else if (which == "levels") {
    suite = "gff-levels";
  } else {
    throw ConfigError("--suite must be cocycle, germ or levels");
  }
  auto r = su::run_suite(suite, cfg, seed);
  if (!keep.empty())
    std::erase_if(r.checks, [&](const su::CheckRecord& c) { return c.id != keep; });
  return print_report(r, "");
}

int cmd_replay(const std::string& file, const std::string& id) {
  std::ifstream in(file);
  if (!in) throw ParseError("cannot read report " + file);
  Json j;
  try {
    j = Json::parse(in);
  } catch (const Json::exception& e) {
    throw ParseError(std::string("report is not JSON: ") + e.what());
  }
  // A multi-suite dump from `verify all` holds one report per suite.
  if (j.is_array()) {
    const auto slash = id.find('/');
    const auto suite = id.substr(0, slash);
    auto it = std::find_if(j.begin(), j.end(), [&](const Json& r) { return r.value("suite", "") == suite; });
    if (it == j.end()) throw ParseError("no report for suite '" + suite + "'");
    j = *it;
  }
  const auto c = su::replay(j, id);
  std::string recorded = "?";
  for (const auto& r : j.at("checks"))
    if (r.at("id") == id) recorded = r.at("status").get<std::string>();
  emit(Json{{"id", c.id},
            {"anchor", c.anchor},
            {"status", su::to_string(c.status)},
            {"recorded_status", recorded},
            {"witness", c.witness}},
       "");
  return c.status == su::Status::fail ? 1 : 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"germlab: exact checks for groups of homeomorphisms"};
  app.require_subcommand(1);

  std::string group, word, at, cylinder;
  auto* eval = app.add_subcommand("eval", "evaluate a word in F, T, V or the Lodha-Moore group");
  eval->add_option("--group", group, "F | T | V | LM")->required();
  eval->add_option("--word", word, "generator letters, rightmost acts first");
  eval->add_option("--at", at, "point to evaluate");
  eval->add_option("--cylinder", cylinder, "cylinder word (V only; 'e' for the empty word)");

  std::vector<std::string> arcs;
  std::string target, w, u;
  auto* compress = app.add_subcommand("compress", "compress closed arcs into ]beta,alpha[ (or C_w into C_u in V)");
  compress->add_option("--c", arcs, "closed arc lo,hi (repeatable)");
  compress->add_option("--target", target, "open target beta,alpha around 0");
  compress->add_option("--w", w, "V: source cylinder");
  compress->add_option("--u", u, "V: target cylinder");

  std::string i1, i2;
  int max_len = 6;
  auto* cproj = app.add_subcommand("compress-proj", "shortest Lodha-Moore word sending i1 into i2");
  cproj->add_option("--i1", i1, "lo,hi")->required();
  cproj->add_option("--i2", i2, "lo,hi")->required();
  cproj->add_option("--max-len", max_len);

  std::string h = "derived", k = "derived";
  int radius = 3;
  auto* chab = app.add_subcommand("chabauty", "agreement radius of two subgroups on a ball");
  chab->set_help_flag("--help", "print this help");
  chab->add_option("--group", group, "F | F-e | T | V")->required();
  chab->add_option("--h", h, "whole | trivial | derived | support:lo,hi | germ:x,...");
  chab->add_option("--k", k, "same grammar as --h");
  chab->add_option("--radius", radius);

  int n = 8, r = 4;
  auto* neu = app.add_subcommand("neumann", "coset-cover sweep over Z/n");
  neu->add_option("--n", n);
  neu->add_option("--r", r);

  std::string su_u, su_x, out;
  int patch_radius = 100;
  auto* sch = app.add_subcommand("schreier", "orbital graph patch of the odometer full group");
  sch->add_option("--u", su_u, "clopen as a cylinder list, e.g. {0,10}")->required();
  sch->add_option("--x", su_x, "preperiod,period of a point in U ('e' for empty)")->required();
  sch->add_option("--radius", patch_radius);
  sch->add_option("--out", out, "DOT file");

  int omega = 5;
  std::string f = "cycle", fprime = "alt", tsuite = "cocycle";
  std::uint64_t seed = 1;
  auto* tree = app.add_subcommand("tree-verify", "checks on G(F,F') acting on the regular tree");
  tree->add_option("--omega", omega);
  tree->add_option("--f", f);
  tree->add_option("--fprime", fprime, "alt | sym | cycle");
  tree->add_option("--suite", tsuite, "cocycle | germ | levels");
  tree->add_option("--seed", seed);

  std::string suite, config_file;
  std::vector<std::string> sets;
  auto* ver = app.add_subcommand("verify", "run a named suite and print its JSON report");
  ver->add_option("suite", suite, "suite name, or 'all'")->required();
  ver->add_option("--seed", seed);
  ver->add_option("--config", config_file, "key = value file");
  ver->add_option("--set", sets, "key=value override (repeatable)");
  ver->add_option("--out", out, "report file (default stdout)");

  std::string report, check_id;
  auto* rep = app.add_subcommand("replay", "re-run one check of a saved report");
  rep->add_option("report", report)->required();
  rep->add_option("check-id", check_id)->required();

  CLI11_PARSE(app, argc, argv);

  try {
    if (*eval) return cmd_eval(group, word, at, cylinder);
    if (*compress) return cmd_compress(arcs, target, w, u);
    if (*cproj) return cmd_compress_proj(i1, i2, max_len);
    if (*chab) return cmd_chabauty(group, h, k, radius);
    if (*neu) {
      const auto s = par::neumann_sweep(n, r);
      emit(Json{{"n_max", n}, {"r_max", r}, {"tuples", s.tuples}, {"covers", s.covers},
                {"violations", s.violations}, {"disagreements", s.disagreements}},
           "");
      return s.violations == 0 && s.disagreements == 0 ? 0 : 1;
    }
    if (*sch) return cmd_schreier(su_u, su_x, patch_radius, out);
    if (*tree) return cmd_tree_verify(omega, f, fprime, tsuite, seed);
    if (*ver) return cmd_verify(suite, seed, read_config(config_file, sets), out);
    if (*rep) return cmd_replay(report, check_id);
  } catch (const Error& e) {
    std::cerr << "germlab: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
