#include "germlab/suites/suites.hpp"

#include "germlab/cantor/prefix_map.hpp"
#include "germlab/circle/thompson.hpp"
#include "germlab/dynamics/neumann.hpp"
#include "germlab/dynamics/probes.hpp"
#include "germlab/error.hpp"
#include "germlab/fullgroup/schreier.hpp"
#include "germlab/par/tree_sweeps.hpp"
#include "germlab/proj/lodha_moore.hpp"
#include "germlab/rng.hpp"
#include "germlab/trees/levels.hpp"

#include <algorithm>
#include <functional>
#include <limits>
#include <sstream>

namespace germlab::suites {

namespace {

// ------------------------------------------------------------ config

struct Field {
  std::string name;
  std::string deflt;
  long long min = 0, max = 0;  // integer range; min > max marks a free-form string
};

class Params {
 public:
  Params(const std::vector<Field>& fields, const Config& given) {
    for (const auto& [k, v] : given) {
      auto it = std::find_if(fields.begin(), fields.end(), [&](const Field& f) { return f.name == k; });
      if (it == fields.end()) throw ConfigError("unknown config field '" + k + "'");
    }
    for (const auto& f : fields) {
      const std::string v = given.count(f.name) ? given.at(f.name) : f.deflt;
      if (f.min <= f.max) {
        long long x = 0;
        std::size_t used = 0;
        try {
          x = std::stoll(v, &used);
        } catch (const std::exception&) {
          used = 0;
        }
        if (used == 0 || used != v.size() || x < f.min || x > f.max)
          throw ConfigError("config field '" + f.name + "' must be an integer in [" + std::to_string(f.min) + ", " +
                            std::to_string(f.max) + "], got '" + v + "'");
        ints_[f.name] = x;
      }
      echo_[f.name] = v;
    }
  }
  int i(const std::string& k) const { return static_cast<int>(ints_.at(k)); }
  const std::string& s(const std::string& k) const { return echo_.at(k); }
  const Config& echo() const { return echo_; }

 private:
  std::map<std::string, long long> ints_;
  Config echo_;
};

CheckRecord record(std::string id, std::string anchor, bool ok, Json witness) {
  return {std::move(id), std::move(anchor), ok ? Status::pass : Status::fail, std::move(witness)};
}

std::string random_letters(Rng& rng, std::string_view alphabet, int max_len) {
  std::string w;
  const auto len = rng.between(0, max_len);
  for (int k = 0; k < len; ++k) w.push_back(alphabet[rng.below(alphabet.size())]);
  return w;
}

using Checks = std::vector<CheckRecord>;

// ------------------------------------------------------------ pl-axioms

// Associativity, inverses and identity on random triples of words. The
// witness of a failure is the first offending triple.
template <class E>
CheckRecord axioms(const std::string& id, int count, int max_len, Rng& rng, std::string_view alphabet,
                   const std::function<E(const std::string&)>& eval, const std::function<bool(const E&)>& is_id) {
  for (int k = 0; k < count; ++k) {
    const std::string a = random_letters(rng, alphabet, max_len);
    const std::string b = random_letters(rng, alphabet, max_len);
    const std::string c = random_letters(rng, alphabet, max_len);
    const E f = eval(a), g = eval(b), h = eval(c);
    std::string law;
    if ((f * g) * h != f * (g * h)) law = "associativity";
    else if (!is_id(f * inverse(f)) || !is_id(inverse(f) * f)) law = "inverse";
    else if (f * E() != f || E() * f != f) law = "identity";
    if (!law.empty())
      return record(id, "group laws", false, Json{{"law", law}, {"f", a}, {"g", b}, {"h", c}, {"index", k}});
  }
  return record(id, "group laws", true, Json{{"triples", count}, {"max_len", max_len}});
}

std::vector<trees::TreeAut> tree_letters() {
  const auto ctx = trees::GffContext::standard();
  const trees::Perm id = trees::Perm::identity(5);
  return {trees::TreeAut::make(ctx, "0", id, {}),                          // s: v -> 0v
          trees::TreeAut::make(ctx, "", trees::Perm::cycle(5), {}),        // r: constant 5-cycle
          trees::TreeAut::make(ctx, "", id, {{"", trees::Perm::parse_cycles("(1 2 3)", 5)}}),  // u
          trees::half_tree_fixator(ctx, "01", 2, trees::Perm::parse_cycles("(0 1 3)", 5))};     // v
}

Checks suite_pl_axioms(const Params& p, Rng& rng) {
  const int n = p.i("words"), L = p.i("max_len");
  Checks out;
  out.push_back(axioms<circle::PLMap>(
      "pl-axioms/F", n, L, rng, "abAB", [](const std::string& w) { return circle::word(circle::Group::F, w); },
      [](const circle::PLMap& f) { return f.is_identity(); }));
  out.push_back(axioms<circle::PLMap>(
      "pl-axioms/T", n, L, rng, "abcABC", [](const std::string& w) { return circle::word(circle::Group::T, w); },
      [](const circle::PLMap& f) { return f.is_identity(); }));
  out.push_back(axioms<cantor::PrefixMap>(
      "pl-axioms/V", n, L, rng, "abcpABCP", [](const std::string& w) { return cantor::word(w); },
      [](const cantor::PrefixMap& f) { return f.is_identity(); }));
  out.push_back(axioms<proj::PPMap>(
      "pl-axioms/lodha-moore", n, L, rng, "abcABC", [](const std::string& w) { return proj::lm_word(w); },
      [](const proj::PPMap& f) { return f.is_identity(); }));
  const auto tl = tree_letters();
  out.push_back(axioms<trees::TreeAut>(
      "pl-axioms/tree-aut", n, L, rng, "rsuvRSUV",
      [&](const std::string& w) {
        trees::TreeAut g;
        for (auto it = w.rbegin(); it != w.rend(); ++it) {
          const auto& x = tl[std::string_view("rsuv").find(static_cast<char>(std::tolower(*it)))];
          g = (std::isupper(static_cast<unsigned char>(*it)) ? inverse(x) : x) * g;
        }
        return g;
      },
      [](const trees::TreeAut& g) { return g.is_identity(); }));
  const auto fg = fullgroup::restricted_generators({""}, 1);
  const std::string fl = std::string("abcdefghijklmnopqrstuvwxyz").substr(0, std::min<std::size_t>(fg.size(), 26));
  out.push_back(axioms<fullgroup::FullGroupElement>(
      "pl-axioms/full-group", n, L, rng, fl,
      [&](const std::string& w) {
        fullgroup::FullGroupElement g;
        for (auto it = w.rbegin(); it != w.rend(); ++it) g = fg[static_cast<std::size_t>(*it - 'a')] * g;
        return g;
      },
      [](const fullgroup::FullGroupElement& g) { return g.is_identity(); }));
  return out;
}

// ------------------------------------------------------------ germ-ff

Checks suite_germ_ff(const Params& p, Rng& rng) {
  Checks out;
  Json bad = Json::array();
  const int n = p.i("commutators"), L = p.i("max_len");
  for (int k = 0; k < n; ++k) {
    const auto a = random_letters(rng, "abAB", L), b = random_letters(rng, "abAB", L);
    const auto f = circle::commutator(circle::word(circle::Group::F, a), circle::word(circle::Group::F, b));
    // Independent reading: slope 1 at 0+ and 1- from the end pieces.
    const bool by_slopes = f.pieces().front().slope_exp == 0 && f.pieces().back().slope_exp == 0;
    if (!circle::in_derived_F(f) || !by_slopes) bad.push_back(Json{{"g", a}, {"h", b}});
  }
  out.push_back(record("germ-ff/commutators", "commutators act trivially near 0", bad.empty(),
                       bad.empty() ? Json{{"commutators", n}} : Json{{"failures", bad}}));
  const bool a_out = !circle::in_derived_F(circle::gen_A());
  const bool b_out = !circle::in_derived_F(circle::gen_B());
  out.push_back(record("germ-ff/generators", "generators have non-trivial germ at 0", a_out && b_out,
                       Json{{"A_in_derived", !a_out}, {"B_in_derived", !b_out}}));
  return out;
}

// ------------------------------------------------------------ compress

Dyadic level_dyadic(Rng& rng, int level, long long lo, long long hi) {
  return Dyadic::pow2(-level) * Dyadic(static_cast<long long>(rng.between(lo, hi)));
}

Rational arc_mid(const circle::Arc& a) {
  const Rational m = a.start < a.end ? Rational((a.start + a.end) / 2) : Rational((a.start + a.end + 1) / 2);
  return m >= 1 ? Rational(m - 1) : m;
}

Checks suite_compress(const Params& p, Rng& rng) {
  Checks out;
  const int n = p.i("instances");
  Json bad = Json::array();
  for (int k = 0; k < n; ++k) {
    // Target ]beta, alpha[ around 0; C one or two closed arcs leaving a gap.
    const Dyadic alpha = level_dyadic(rng, 6, 1, 31), beta = level_dyadic(rng, 6, 33, 63);
    const circle::Arc target = circle::Arc::make(beta.to_rational(), alpha.to_rational(), false);
    std::vector<long long> cuts;
    const int arcs = static_cast<int>(rng.between(1, 2));
    while (static_cast<int>(cuts.size()) < 2 * arcs) {
      const long long c = rng.between(0, 31);
      if (std::find(cuts.begin(), cuts.end(), c) == cuts.end()) cuts.push_back(c);
    }
    std::sort(cuts.begin(), cuts.end());
    const int shift = static_cast<int>(rng.below(static_cast<std::uint64_t>(2 * arcs)));  // rotate so arcs may wrap
    std::rotate(cuts.begin(), cuts.begin() + shift, cuts.end());
    circle::Region C;
    for (int a = 0; a < arcs; ++a)
      C.push_back(circle::Arc::make(Rational(cuts[static_cast<std::size_t>(2 * a)], 32),
                                    Rational(cuts[static_cast<std::size_t>(2 * a + 1)], 32), true));
    Json inst{{"C", Json::array()}, {"target", target.str()}};
    for (const auto& a : C) inst["C"].push_back(a.str());
    try {
      const auto g = circle::compress(C, target).map;
      const bool inside = circle::region_inside(g.image(C), circle::Region{target});
      const bool derived = circle::in_derived_F(g);
      // Pointwise: endpoints and midpoints of C land in the target.
      bool pts = true;
      for (const auto& a : C)
        for (const Rational& x : {a.start, a.end, arc_mid(a)}) pts = pts && target.contains(g(x));
      if (!(inside && derived && pts)) bad.push_back(inst);
    } catch (const Error& e) {
      inst["error"] = e.what();
      bad.push_back(inst);
    }
  }
  out.push_back(record("compress/circle", "extreme proximality in [F,F]", bad.empty(),
                       bad.empty() ? Json{{"instances", n}} : Json{{"failures", bad}}));

  Json bad_v = Json::array();
  for (int k = 0; k < n; ++k) {
    cantor::Word w, u;
    for (auto len = rng.between(1, 5); len > 0; --len) w.push_back(rng.coin() ? '1' : '0');
    for (auto len = rng.between(1, 5); len > 0; --len) u.push_back(rng.coin() ? '1' : '0');
    const auto g = cantor::compress_v(w, u);
    bool pts = cantor::compresses(g, w, u);
    // Points off C_w, from each sibling cylinder along w.
    for (const auto& s : cantor::complement_code(w))
      for (const char* tail : {"0", "1", "01"})
        pts = pts && g(cantor::EventuallyPeriodic(s, tail)).starts_with(u);
    if (!pts) bad_v.push_back(Json{{"w", w}, {"u", u}});
  }
  out.push_back(record("compress/v", "extreme proximality in V", bad_v.empty(),
                       bad_v.empty() ? Json{{"instances", n}} : Json{{"failures", bad_v}}));
  return out;
}

// ------------------------------------------------------------ chabauty-net

Checks suite_chabauty(const Params& p, Rng&) {
  using namespace dynamics;
  const int r = p.i("radius"), len = p.i("net");
  const auto G = group_F_marked_e();
  const auto b = ball(G, r);
  const auto H = support_inside_spec(circle::Region{circle::Arc{Rational(1, 4), Rational(1, 2), true}});
  const auto limit = identity_germ_spec({Rational(0)});
  const auto net = expanding_net(Dyadic::parse("1/4"), Dyadic::parse("1/2"), len);
  const auto rep = conjugate_net_probe(H, net, limit, b, r);
  Json w{{"ball", b.size()}, {"predicted_size", rep.predicted_size}, {"sizes", rep.sizes}, {"matches", rep.matches},
         {"stabilized_at", rep.stabilized_at ? Json(*rep.stabilized_at) : Json(nullptr)}};
  Checks out;
  out.push_back(record("chabauty-net/stabilizes", "conjugates accumulate on [F,F]", rep.stabilized_at.has_value(), w));
  // Frozen for the default marking {a, b, e} at radius 3.
  if (r == 3 && len >= 4)
    out.push_back(record("chabauty-net/regression", "stabilization index", rep.stabilized_at == 4,
                         Json{{"expected", 4}, {"got", w["stabilized_at"]}}));
  const auto control = conjugate_net_probe(H, net, trivial<circle::PLMap>(), b, r);
  out.push_back(record("chabauty-net/control", "a wrong limit never stabilizes", !control.stabilized_at.has_value(),
                       Json{{"sizes", control.sizes}}));
  return out;
}

// ------------------------------------------------------------ neumann

Checks suite_neumann(const Params& p, Rng&) {
  const auto s = par::neumann_sweep(p.i("n_max"), p.i("r_max"));
  const auto ref = par::neumann_sweep_serial(p.i("n_max"), p.i("r_max"));
  Json w{{"tuples", s.tuples}, {"covers", s.covers}, {"violations", s.violations}, {"disagreements", s.disagreements}};
  Checks out;
  out.push_back(record("neumann/bound", "finite coset covers contain a subgroup of index <= r", s.violations == 0, w));
  out.push_back(record("neumann/oracle", "modular oracle agrees on every cover", s.disagreements == 0, w));
  out.push_back(record("neumann/parallel", "parallel sweep equals serial sweep", s == ref,
                       Json{{"serial_tuples", ref.tuples}, {"serial_covers", ref.covers}}));
  return out;
}

// ------------------------------------------------------------ micro-support

circle::PLMap random_F(Rng& rng, const std::vector<circle::PLMap>& gens, int max_len) {
  circle::PLMap f;
  for (auto len = rng.between(0, max_len); len > 0; --len) {
    const auto& g = gens[rng.below(gens.size())];
    f = rng.coin() ? g * f : inverse(g) * f;
  }
  return f;
}

Checks suite_micro_support(const Params& p, Rng& rng) {
  using namespace dynamics;
  Checks out;
  const int n = p.i("instances");
  Json bad = Json::array();
  for (int k = 0; k < n; ++k) {
    std::vector<circle::PLMap> P;
    for (auto m = rng.between(1, 3); m > 0; --m) {
      circle::PLMap f;
      while (f.is_identity()) f = random_F(rng, {circle::gen_A(), circle::gen_B(), circle::gen_C()}, 5);
      P.push_back(f);
    }
    const Rational z = Rational(rng.between(0, 4095), 4096) + Rational(1, 8192);
    Json inst{{"index", k}, {"z", germlab::to_string(z)}};
    try {
      const auto s = disjoint_open_search(P, z);
      std::vector<std::vector<circle::PLMap>> stabs;
      for (const auto& u : s.U)
        stabs.push_back(circle::rigid_stabilizer_gens(to_dyadic(u.start), to_dyadic(u.end)));
      auto element = [&] {
        circle::PLMap f;
        for (const auto& gens : stabs) f = f * random_F(rng, gens, 4);
        return f;
      };
      const auto gamma = element(), delta = element();
      const auto l = static_cast<std::size_t>(rng.below(P.size()));
      const auto a = micro_support_checked(gamma, delta, P, s, l);
      const auto c = verify_micro_support(a, gamma, delta, s.U[l], s.W);
      if (!verify_disjoint_open(P, z, s) || !c.all()) {
        inst["identity_on_W"] = c.identity_on_W;
        inst["U_invariant"] = c.U_invariant;
        inst["equals_on_U"] = c.equals_on_U;
        bad.push_back(inst);
      }
    } catch (const Error& e) {
      inst["error"] = e.what();
      bad.push_back(inst);
    }
  }
  out.push_back(record("micro-support/circle", "commutator trick on disjoint open sets", bad.empty(),
                       bad.empty() ? Json{{"instances", n}} : Json{{"failures", bad}}));

  Json bad_v = Json::array();
  for (int k = 0; k < p.i("instances_v"); ++k) {
    std::vector<cantor::PrefixMap> P;
    for (auto m = rng.between(1, 3); m > 0; --m) {
      cantor::PrefixMap f;
      while (f.is_identity()) f = cantor::word(random_letters(rng, "abcpABCP", 5));
      P.push_back(f);
    }
    const cantor::EventuallyPeriodic z("", rng.coin() ? "01" : "0");
    Json inst{{"index", k}, {"z", z.str()}};
    try {
      const auto s = disjoint_open_search(P, z);
      std::vector<std::vector<cantor::PrefixMap>> stabs;
      for (const auto& u : s.U) stabs.push_back(cantor::rigid_stabilizer_v(u));
      auto element = [&] {
        cantor::PrefixMap f;
        for (const auto& gens : stabs)
          for (auto j = rng.between(0, 3); j > 0; --j) f = f * gens[rng.below(gens.size())];
        return f;
      };
      const auto gamma = element(), delta = element();
      const auto l = static_cast<std::size_t>(rng.below(P.size()));
      const auto a = micro_support_checked(gamma, delta, P, s, l);
      if (!verify_disjoint_open(P, z, s) || !verify_micro_support(a, gamma, delta, s.U[l], s.W).all())
        bad_v.push_back(inst);
    } catch (const Error& e) {
      inst["error"] = e.what();
      bad_v.push_back(inst);
    }
  }
  out.push_back(record("micro-support/v", "commutator trick on disjoint cylinders", bad_v.empty(),
                       bad_v.empty() ? Json{{"instances", p.i("instances_v")}} : Json{{"failures", bad_v}}));
  return out;
}

// ------------------------------------------------------------ v-germs

// Germ class read from point evaluations and cylinder images only.
std::string germ_by_points(const cantor::PrefixMap& g, const cantor::EventuallyPeriodic& x) {
  if (g(x) != x) return "moves_x";
  for (std::size_t k = 0; k < 40; ++k) {
    const cantor::Word c = x.prefix(k);
    if (g.image(c) == std::vector<cantor::Word>{c}) return "fixes_neighbourhood";
  }
  // Points agreeing with x on a long prefix and differing right after.
  for (std::size_t k = 20; k < 40; ++k) {
    cantor::Word head = x.prefix(k);
    head.push_back(x.at(k) == '0' ? '1' : '0');
    const auto y = x.drop(k + 1).prepend(head);
    if (g(y) == y) return "unclassified";
  }
  return "isolated_fixed_point";
}

Checks suite_v_germs(const Params& p, Rng& rng) {
  Json bad = Json::array();
  std::map<std::string, int> seen;
  const int n = p.i("instances");
  for (int k = 0; k < n; ++k) {
    const auto w = random_letters(rng, "abcpABCP", 8);
    const auto g = cantor::word(w);
    // Fixed points of moving rules (w y = z y) and points in identity rules.
    std::vector<cantor::EventuallyPeriodic> pts;
    for (const auto& [a, b] : g.rules()) {
      if (a == b) pts.emplace_back(a, rng.coin() ? "01" : "0");
      else if (b.size() > a.size() && cantor::is_prefix(a, b)) pts.emplace_back(a, b.substr(a.size()));
      else if (a.size() > b.size() && cantor::is_prefix(b, a)) pts.emplace_back(a, a.substr(b.size()));
    }
    pts.emplace_back("", rng.coin() ? "1" : "011");
    for (const auto& x : pts) {
      const std::string got(cantor::to_string(cantor::germ_class(g, x)));
      const std::string want = germ_by_points(g, x);
      ++seen[got];
      if (got != want) bad.push_back(Json{{"word", w}, {"x", x.str()}, {"class", got}, {"oracle", want}});
    }
  }
  Json counts = Json::object();
  for (const auto& [k, v] : seen) counts[k] = v;
  Checks out;
  out.push_back(record("v-germs/dichotomy", "Hausdorff germs for V", bad.empty(),
                       bad.empty() ? Json{{"classes", counts}} : Json{{"failures", bad}}));
  return out;
}

// ------------------------------------------------------------ G(F,F')

std::shared_ptr<const trees::GffContext> gff_context(const Params& p) {
  const int n = p.i("omega");
  const auto& fp = p.s("fprime");
  if (fp == "alt") {
    if (n % 2 == 0) throw ConfigError("config field 'omega' must be odd with fprime = alt");
    return trees::GffContext::make(trees::PermGroupPair::cycle_alt(n));
  }
  if (fp == "sym") return trees::GffContext::make(trees::PermGroupPair::cycle_sym(n));
  if (fp == "cycle")
    return trees::GffContext::make(trees::PermGroupPair::make({trees::Perm::cycle(n)}, {trees::Perm::cycle(n)}, n));
  throw ConfigError("config field 'fprime' must be alt, sym or cycle, got '" + fp + "'");
}

Checks suite_gff_cocycle(const Params& p, Rng& rng) {
  const auto ctx = gff_context(p);
  const auto B = ctx->tree.ball(p.i("depth"));
  Checks out;
  Json bad = Json::array();
  for (int k = 0; k < p.i("pairs"); ++k) {
    const auto g = trees::random_tree_aut(ctx, rng, 3, 4);
    const auto h = trees::random_tree_aut(ctx, rng, 3, 4);
    if (const auto v = par::cocycle_violations(g, h, B); v > 0)
      bad.push_back(Json{{"g", to_json(g)}, {"h", to_json(h)}, {"violations", v}});
  }
  out.push_back(record("gff-cocycle/cocycle", "local permutations form a cocycle", bad.empty(),
                       bad.empty() ? Json{{"pairs", p.i("pairs")}, {"ball", B.size()}} : Json{{"failures", bad}}));

  // Elliptic elements: products of half-tree fixators along a random ray.
  Json bad_e = Json::array();
  const auto B2 = ctx->tree.ball(2);
  const int n = ctx->tree.degree;
  for (int k = 0; k < p.i("elliptic"); ++k) {
    trees::Vertex ray;
    while (ray.size() < 10) {
      const char c = static_cast<char>('0' + rng.below(static_cast<std::uint64_t>(n)));
      if (ray.empty() || ray.back() != c) ray.push_back(c);
    }
    trees::TreeAut g = trees::TreeAut::make(ctx, "", trees::Perm::identity(n), {});
    for (auto m = rng.between(1, 3); m > 0; --m) {
      const auto& v = B2[rng.below(B2.size())];
      const int a = ctx->tree.path(v, ray).front();
      std::vector<const trees::Perm*> stab;
      for (const auto& q : ctx->groups.Fprime())
        if (q(a) == a) stab.push_back(&q);
      g = trees::half_tree_fixator(ctx, v, a, *stab[rng.below(stab.size())]) * g;
    }
    Json inst{{"g", to_json(g)}, {"ray", ray}};
    try {
      const auto r = trees::elliptic_germ_check(g, ray, 10);
      if (!r.fixes_half_tree || !r.verified) bad_e.push_back(inst);
    } catch (const Error& e) {
      inst["error"] = e.what();
      bad_e.push_back(inst);
    }
  }
  out.push_back(record("gff-cocycle/elliptic", "elliptic elements fix a half-tree", bad_e.empty(),
                       bad_e.empty() ? Json{{"elements", p.i("elliptic")}} : Json{{"failures", bad_e}}));
  return out;
}

Checks suite_gff_levels(const Params& p, Rng&) {
  const auto ctx = gff_context(p);
  Checks out;
  const auto& xi = p.s("xi");
  if (!ctx->tree.is_vertex(xi) || static_cast<int>(xi.size()) <= p.i("depth"))
    throw ConfigError("config field 'xi' must be a reduced colour word longer than depth");
  if (!ctx->groups.fprime_two_transitive()) {
    out.push_back(record("gff-levels/transitivity", "level sets are orbits of the end stabilizer", false,
                         Json{{"infeasible", "F' is not 2-transitive"}}));
    return out;
  }
  const auto s = par::level_pairs(ctx, xi, p.i("depth"), p.i("max_distance"));
  out.push_back(record("gff-levels/transitivity", "level sets are orbits of the end stabilizer",
                       s.pairs > 0 && s.verified == s.pairs,
                       Json{{"pairs", s.pairs}, {"verified", s.verified}, {"max_steps", s.max_steps}}));
  // Each vertex has one neighbour a level down.
  std::size_t bad = 0;
  for (const auto& v : ctx->tree.ball(p.i("depth"))) {
    const int k = trees::busemann(ctx->tree, xi, v);
    int lower = 0;
    for (int c = 0; c < ctx->tree.degree; ++c)
      if (trees::busemann(ctx->tree, xi, ctx->tree.step(v, c)) == k - 1) ++lower;
    if (lower != 1) ++bad;
  }
  out.push_back(record("gff-levels/lower-neighbour", "unique neighbour one level down", bad == 0,
                       Json{{"bad_vertices", bad}}));
  return out;
}

// ------------------------------------------------------------ fullgroup-qi

Checks suite_fullgroup_qi(const Params& p, Rng&) {
  using namespace fullgroup;
  Checks out;
  struct Case {
    std::string name;
    Clopen U;
    EventuallyPeriodic x;
    int radius;
  };
  for (const auto& c : {Case{"c0", {"0"}, {"", "0"}, p.i("radius_c0")}, Case{"c01", {"01"}, {"01", "0"}, p.i("radius_c01")}}) {
    const auto patch = schreier_patch(c.U, cayley_step(c.U), c.x, c.radius);
    const auto rep = quasi_isometry_check(patch, p.i("margin"));
    Json w = to_json(rep);
    w["U"] = fullgroup::to_string(c.U);
    w["x"] = c.x.str();
    w["step"] = patch.step;
    out.push_back(record("fullgroup-qi/" + c.name + "-qi", "Delta_x is quasi-isometric to the Cayley graph",
                         rep.violations.empty() && rep.interior >= 100, w));
    out.push_back(record("fullgroup-qi/" + c.name + "-dense", "Delta_x is 1-dense", rep.one_dense,
                         Json{{"U", fullgroup::to_string(c.U)}}));
    const auto small = schreier_patch(c.U, cayley_step(c.U), c.x, 60);
    out.push_back(record("fullgroup-qi/" + c.name + "-orbit", "Schreier graph of the gamma generators is Delta_x",
                         orbital_schreier_edges(small) == small.edges,
                         Json{{"edges", small.edges.size()}, {"vertices", small.vertices.size()}}));
  }
  return out;
}

// ------------------------------------------------------------ proj-bn

Checks suite_proj_bn(const Params& p, Rng& rng) {
  using namespace proj;
  Checks out;
  const bool gens = is_continuous(lm_a()) && is_continuous(lm_b()) && is_continuous(lm_c());
  out.push_back(record("proj-bn/generators-continuous", "generators are homeomorphisms", gens, Json::object()));
  Json bad = Json::array();
  for (int k = 0; k < p.i("words"); ++k) {
    const auto w = random_letters(rng, "abcABC", 10);
    const auto f = lm_word(w);
    // One-sided values at each cut, recomputed from the pieces.
    bool ok = is_continuous(f);
    for (const auto& c : f.cuts()) ok = ok && f.piece_left_of(c)(PPoint(c)) == f.piece_at(c)(PPoint(c));
    if (!ok) bad.push_back(w);
  }
  out.push_back(record("proj-bn/words-continuous", "words are homeomorphisms", bad.empty(),
                       bad.empty() ? Json{{"words", p.i("words")}} : Json{{"failures", bad}}));
  Json images = Json::array();
  bool law = true;
  for (int n = 1; n <= p.i("n_max"); ++n) {
    const auto I = bn_image(n);
    images.push_back(Json{{"n", n}, {"image", I.str()}});
    law = law && I == Interval{QuadExt(0), QuadExt(n + 1)};
  }
  out.push_back(record("proj-bn/bn-law", "b^n([0,1]) = [0, n+1]", law, Json{{"images", images}}));
  return out;
}

// ------------------------------------------------------------ registry

struct Suite {
  std::string name;
  std::vector<Field> fields;
  std::function<Checks(const Params&, Rng&)> run;
};

constexpr long long kBig = 1000000;

const std::vector<Suite>& registry() {
  static const std::vector<Suite> suites = {
      {"pl-axioms", {{"words", "500", 1, kBig}, {"max_len", "10", 0, 64}}, suite_pl_axioms},
      {"germ-ff", {{"commutators", "200", 1, kBig}, {"max_len", "6", 0, 64}}, suite_germ_ff},
      {"compress", {{"instances", "50", 1, kBig}}, suite_compress},
      {"chabauty-net", {{"radius", "3", 0, 6}, {"net", "10", 1, 30}}, suite_chabauty},
      {"neumann", {{"n_max", "8", 1, 12}, {"r_max", "4", 1, 6}}, suite_neumann},
      {"micro-support", {{"instances", "100", 1, kBig}, {"instances_v", "50", 0, kBig}}, suite_micro_support},
      {"v-germs", {{"instances", "200", 1, kBig}}, suite_v_germs},
      {"gff-cocycle",
       {{"omega", "5", 3, trees::kMaxDegree}, {"fprime", "alt", 1, 0}, {"pairs", "500", 1, kBig},
        {"depth", "5", 0, 8}, {"elliptic", "50", 0, kBig}},
       suite_gff_cocycle},
      {"gff-levels",
       {{"omega", "5", 3, trees::kMaxDegree}, {"fprime", "alt", 1, 0}, {"depth", "4", 0, 6},
        {"max_distance", "4", 0, 12}, {"xi", "012340", 1, 0}},
       suite_gff_levels},
      {"fullgroup-qi",
       {{"radius_c0", "400", 8, 100000}, {"radius_c01", "800", 8, 100000}, {"margin", "-1", -1, 100000}},
       suite_fullgroup_qi},
      {"proj-bn", {{"words", "300", 1, kBig}, {"n_max", "10", 1, 64}}, suite_proj_bn},
  };
  return suites;
}

const Suite& find_suite(const std::string& name) {
  for (const auto& s : registry())
    if (s.name == name) return s;
  throw UnknownSuite("unknown suite '" + name + "'");
}

}  // namespace

std::string_view to_string(Status s) {
  switch (s) {
    case Status::pass: return "pass";
    case Status::fail: return "fail";
    case Status::skipped: return "skipped";
  }
  return "?";
}

bool SuiteReport::all_pass() const {
  return std::all_of(checks.begin(), checks.end(), [](const CheckRecord& c) { return c.status != Status::fail; });
}

Json to_json(const SuiteReport& r) {
  Json cfg = Json::object();
  for (const auto& [k, v] : r.config) cfg[k] = v;
  Json checks = Json::array();
  std::size_t pass = 0, fail = 0, skipped = 0;
  for (const auto& c : r.checks) {
    checks.push_back(Json{{"id", c.id}, {"anchor", c.anchor}, {"status", to_string(c.status)}, {"witness", c.witness}});
    (c.status == Status::pass ? pass : c.status == Status::fail ? fail : skipped)++;
  }
  return Json{{"schema", kReportSchema}, {"suite", r.suite},  {"seed", r.seed},
              {"config", cfg},           {"checks", checks},  {"summary", {{"pass", pass}, {"fail", fail}, {"skipped", skipped}}}};
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> n;
    for (const auto& s : registry()) n.push_back(s.name);
    return n;
  }();
  return names;
}

Config default_config(const std::string& suite) {
  Config c;
  for (const auto& f : find_suite(suite).fields) c[f.name] = f.deflt;
  return c;
}

SuiteReport run_suite(const std::string& name, const Config& config, std::uint64_t seed) {
  const Suite& s = find_suite(name);
  const Params params(s.fields, config);
  Rng rng(seed);
  SuiteReport r;
  r.suite = name;
  r.seed = seed;
  r.config = params.echo();
  r.checks = s.run(params, rng);
  std::sort(r.checks.begin(), r.checks.end(), [](const CheckRecord& a, const CheckRecord& b) { return a.id < b.id; });
  return r;
}

CheckRecord replay(const Json& report, const std::string& check_id) {
  try {
    Config cfg;
    for (const auto& [k, v] : report.at("config").items()) cfg[k] = v.get<std::string>();
    const auto r = run_suite(report.at("suite").get<std::string>(), cfg, report.at("seed").get<std::uint64_t>());
    for (const auto& c : r.checks)
      if (c.id == check_id) return c;
  } catch (const Json::exception& e) {
    throw ParseError(std::string("malformed report: ") + e.what());
  }
  throw ParseError("no check '" + check_id + "' in the report's suite");
}

Config parse_config(const std::string& text) {
  Config c;
  std::istringstream in(text);
  std::string line;
  int n = 0;
  auto trim = [](std::string s) {
    const auto a = s.find_first_not_of(" \t\r");
    const auto b = s.find_last_not_of(" \t\r");
    return a == std::string::npos ? std::string() : s.substr(a, b - a + 1);
  };
  while (std::getline(in, line)) {
    ++n;
    if (const auto h = line.find('#'); h != std::string::npos) line.resize(h);
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) throw ParseError("config line " + std::to_string(n) + ": expected key = value");
    const auto key = trim(line.substr(0, eq));
    if (key.empty()) throw ParseError("config line " + std::to_string(n) + ": empty key");
    c[key] = trim(line.substr(eq + 1));
  }
  return c;
}

}  // namespace germlab::suites
