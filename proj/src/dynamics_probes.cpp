#include "germlab/dynamics/probes.hpp"

#include <cstdlib>

namespace germlab::dynamics {

std::size_t default_budget() {
  if (const char* env = std::getenv("GERMLAB_BUDGET")) {
    char* end = nullptr;
    const unsigned long long v = std::strtoull(env, &end, 10);
    if (end && *end == '\0' && v > 0) return static_cast<std::size_t>(v);
    throw ParseError(std::string("GERMLAB_BUDGET is not a positive integer: '") + env + "'");
  }
  return 200000;
}

using circle::Arc;
using circle::PLMap;
using circle::Region;

// ------------------------------------------------------------ circle

MarkedGroup<PLMap> group_F() {
  return MarkedGroup<PLMap>::with_inverses("F", {{"a", circle::gen_A()}, {"b", circle::gen_B()}});
}

MarkedGroup<PLMap> group_T() {
  return MarkedGroup<PLMap>::with_inverses("T", {{"a", circle::gen_A()}, {"b", circle::gen_B()}, {"c", circle::gen_C()}});
}

MarkedGroup<PLMap> group_F_marked_e() {
  const PLMap e = circle::embed(circle::gen_A(), Dyadic::parse("1/16"), Dyadic::parse("15/16"));
  return MarkedGroup<PLMap>::with_inverses("F(a,b,e)", {{"a", circle::gen_A()}, {"b", circle::gen_B()}, {"e", e}});
}

SubgroupSpec<PLMap> support_inside_spec(const Region& region) {
  std::string name = "support-inside(";
  for (std::size_t i = 0; i < region.size(); ++i) name += (i ? "," : "") + region[i].str();
  return {name + ")", [region](const PLMap& f) { return circle::support_inside(f, region); }};
}

SubgroupSpec<PLMap> identity_germ_spec(const std::vector<Rational>& points) {
  std::string name = "identity-germ-at(";
  for (std::size_t i = 0; i < points.size(); ++i) name += (i ? "," : "") + to_string(points[i]);
  return {name + ")", [points](const PLMap& f) {
            for (const auto& p : points)
              if (!circle::germ_data(f, p).identity_germ()) return false;
            return true;
          }};
}

std::vector<PLMap> expanding_net(const Dyadic& a, const Dyadic& b, int count) {
  if (!(Dyadic(0) < a && a < b && b < Dyadic(1))) throw PreconditionError("expanding_net: need 0 < a < b < 1");
  std::vector<PLMap> out;
  for (int n = 1; n <= count; ++n) {
    const Dyadic c = Dyadic::pow2(-(n + 1));
    const Dyadic c2 = Dyadic(1) - c;
    std::vector<circle::Piece> pieces = circle::dyadic_bridge(Dyadic(0), a, Dyadic(0), c);
    for (const auto& p : circle::dyadic_bridge(a, b, c, c2)) pieces.push_back(p);
    for (const auto& p : circle::dyadic_bridge(b, Dyadic(1), c2, Dyadic(1))) pieces.push_back(p);
    out.push_back(PLMap::from_pieces(std::move(pieces)));
  }
  return out;
}

namespace {

Arc closure(const Arc& a) { return {a.start, a.end, true}; }

struct ArcChoice {
  Arc U;      // closed
  Arc image;  // g(U), closed
};

bool arc_admissible(const Arc& I, const Arc& J, const std::vector<ArcChoice>& prev) {
  if (I.meets(J)) return false;
  for (const auto& c : prev)
    if (I.meets(c.U) || I.meets(c.image) || J.meets(c.U) || J.meets(c.image)) return false;
  return true;
}

}  // namespace

DisjointOpenArcs disjoint_open_search(const std::vector<PLMap>& P, const Rational& z, int max_depth) {
  for (const auto& g : P)
    if (g.is_identity()) throw PreconditionError("disjoint_open_search: identity element in P");
  std::vector<Rational> gz;  // z lies in g^-1(U) iff g(z) lies in U
  for (const auto& g : P) gz.push_back(g(z));
  for (int depth = 1; depth <= max_depth; ++depth) {
    const Integer N = Integer(1) << depth;
    std::vector<ArcChoice> chosen;
    for (const auto& g : P) {
      bool found = false;
      for (Integer k = 0; k < N && !found; ++k) {
        const Arc I{Rational(k, N), Rational(k + 1, N), true};
        if (I.contains(z)) continue;
        if (std::any_of(gz.begin(), gz.end(), [&](const Rational& y) { return I.contains(y); })) continue;
        const Arc J = g.image(I);
        if (!arc_admissible(I, J, chosen)) continue;
        chosen.push_back({I, J});
        found = true;
      }
      if (!found) break;
    }
    if (chosen.size() != P.size()) continue;
    // Everything W must avoid is closed and misses z, so a small arc works.
    Region avoid;
    for (const auto& c : chosen) {
      avoid.push_back(c.U);
      for (const auto& g : P) avoid.push_back(inverse(g).image(c.U));
    }
    for (int k = depth; k < depth + 64; ++k) {
      const Rational h(Integer(1), Integer(1) << k);
      const Arc W = Arc::make(z - h, z + h, true);
      if (regions_meet({W}, avoid)) continue;
      DisjointOpenArcs out;
      for (const auto& c : chosen) out.U.push_back({c.U.start, c.U.end, false});
      out.W = {W.start, W.end, false};
      out.depth = depth;
      return out;
    }
  }
  throw SearchFailure("disjoint_open_search: no admissible arcs up to level " + std::to_string(max_depth));
}

bool verify_disjoint_open(const std::vector<PLMap>& P, const Rational& z, const DisjointOpenArcs& d) {
  if (d.U.size() != P.size() || !d.W.contains(z)) return false;
  Region sets;
  for (std::size_t i = 0; i < P.size(); ++i) sets.push_back(closure(d.U[i]));
  for (std::size_t i = 0; i < P.size(); ++i) sets.push_back(P[i].image(closure(d.U[i])));
  for (std::size_t i = 0; i < sets.size(); ++i)
    for (std::size_t j = i + 1; j < sets.size(); ++j)
      if (sets[i].meets(sets[j])) return false;
  const Arc W = closure(d.W);
  for (const auto& u : d.U) {
    if (W.meets(closure(u))) return false;
    for (const auto& g : P)
      if (W.meets(inverse(g).image(closure(u)))) return false;
  }
  return true;
}

PLMap micro_support_checked(const PLMap& gamma, const PLMap& delta, const std::vector<PLMap>& P,
                            const DisjointOpenArcs& d, std::size_t l) {
  if (l >= P.size()) throw PreconditionError("micro_support: index out of range");
  Region closures;
  for (const auto& u : d.U) closures.push_back(closure(u));
  for (const PLMap* f : {&gamma, &delta}) {
    if (!circle::support_inside(*f, closures)) throw PreconditionError("micro_support: support not inside the U_i");
    for (const auto& u : closures)
      if (f->image(u) != u) throw PreconditionError("micro_support: some U_i is not invariant");
  }
  return micro_support_element(gamma, delta, P[l]);
}

MicroSupportCheck verify_micro_support(const PLMap& a, const PLMap& gamma, const PLMap& delta, const Arc& U_l,
                                       const Arc& W) {
  MicroSupportCheck c;
  c.identity_on_W = circle::agree_on(a, PLMap(), closure(W));
  c.U_invariant = a.image(closure(U_l)) == closure(U_l);
  c.equals_on_U = circle::agree_on(a, gamma * inverse(delta), closure(U_l));
  return c;
}

// ------------------------------------------------------------ Cantor set

using cantor::EventuallyPeriodic;
using cantor::PrefixMap;
using cantor::Word;

MarkedGroup<PrefixMap> group_V() {
  return MarkedGroup<PrefixMap>::with_inverses(
      "V", {{"a", cantor::gen_A()}, {"b", cantor::gen_B()}, {"c", cantor::gen_C()}, {"p", cantor::gen_P()}});
}

bool identity_on(const PrefixMap& g, const Word& c) { return g.image(c) == std::vector<Word>{c}; }

bool leaves_invariant(const PrefixMap& g, const Word& c) {
  for (const PrefixMap& h : {g, inverse(g)})
    for (const auto& w : h.image(c))
      if (!cantor::is_prefix(c, w)) return false;
  return true;
}

SubgroupSpec<PrefixMap> support_inside_spec(const std::vector<Word>& cylinders) {
  std::string name = "support-inside(";
  for (std::size_t i = 0; i < cylinders.size(); ++i) name += (i ? "," : "") + cylinders[i];
  return {name + ")", [cylinders](const PrefixMap& f) {
            for (const auto& s : f.support())
              if (std::none_of(cylinders.begin(), cylinders.end(), [&](const Word& c) { return cantor::is_prefix(c, s); }))
                return false;
            return true;
          }};
}

SubgroupSpec<PrefixMap> identity_germ_spec(const std::vector<EventuallyPeriodic>& points) {
  std::string name = "identity-germ-at(";
  for (std::size_t i = 0; i < points.size(); ++i) name += (i ? "," : "") + points[i].str();
  return {name + ")", [points](const PrefixMap& f) {
            for (const auto& p : points)
              if (cantor::germ_class(f, p) != cantor::GermClass::fixes_neighbourhood) return false;
            return true;
          }};
}

namespace {

bool words_meet(const std::vector<Word>& a, const std::vector<Word>& b) {
  for (const auto& x : a)
    for (const auto& y : b)
      if (cantor::cylinders_meet(x, y)) return true;
  return false;
}

Word level_word(unsigned long long k, int depth) {
  Word w(static_cast<std::size_t>(depth), '0');
  for (int i = depth - 1; i >= 0; --i, k >>= 1) w[static_cast<std::size_t>(i)] = (k & 1) ? '1' : '0';
  return w;
}

}  // namespace

DisjointOpenCylinders disjoint_open_search(const std::vector<PrefixMap>& P, const EventuallyPeriodic& z, int max_depth) {
  for (const auto& g : P)
    if (g.is_identity()) throw PreconditionError("disjoint_open_search: identity element in P");
  std::vector<EventuallyPeriodic> gz;
  for (const auto& g : P) gz.push_back(g(z));
  for (int depth = 1; depth <= max_depth; ++depth) {
    std::vector<std::vector<Word>> taken;  // U_i and g_i(U_i) as cylinder lists
    std::vector<Word> U;
    for (const auto& g : P) {
      bool found = false;
      for (unsigned long long k = 0; k < (1ULL << depth) && !found; ++k) {
        const Word w = level_word(k, depth);
        if (z.starts_with(w)) continue;
        if (std::any_of(gz.begin(), gz.end(), [&](const EventuallyPeriodic& y) { return y.starts_with(w); })) continue;
        const std::vector<Word> I{w};
        const std::vector<Word> J = g.image(w);
        if (words_meet(I, J)) continue;
        if (std::any_of(taken.begin(), taken.end(), [&](const auto& t) { return words_meet(I, t) || words_meet(J, t); }))
          continue;
        taken.push_back(I);
        taken.push_back(J);
        U.push_back(w);
        found = true;
      }
      if (!found) break;
    }
    if (U.size() != P.size()) continue;
    std::vector<Word> avoid = U;
    for (const auto& u : U)
      for (const auto& g : P)
        for (const auto& w : inverse(g).image(u)) avoid.push_back(w);
    for (std::size_t k = static_cast<std::size_t>(depth);; ++k) {
      const Word W = z.prefix(k);
      if (words_meet({W}, avoid)) continue;
      return {U, W, depth};
    }
  }
  throw SearchFailure("disjoint_open_search: no admissible cylinders up to level " + std::to_string(max_depth));
}

bool verify_disjoint_open(const std::vector<PrefixMap>& P, const EventuallyPeriodic& z, const DisjointOpenCylinders& d) {
  if (d.U.size() != P.size() || !z.starts_with(d.W)) return false;
  std::vector<std::vector<Word>> sets;
  for (const auto& u : d.U) sets.push_back({u});
  for (std::size_t i = 0; i < P.size(); ++i) sets.push_back(P[i].image(d.U[i]));
  for (std::size_t i = 0; i < sets.size(); ++i)
    for (std::size_t j = i + 1; j < sets.size(); ++j)
      if (words_meet(sets[i], sets[j])) return false;
  for (const auto& u : d.U) {
    if (cantor::cylinders_meet(d.W, u)) return false;
    for (const auto& g : P)
      if (words_meet({d.W}, inverse(g).image(u))) return false;
  }
  return true;
}

PrefixMap micro_support_checked(const PrefixMap& gamma, const PrefixMap& delta, const std::vector<PrefixMap>& P,
                                const DisjointOpenCylinders& d, std::size_t l) {
  if (l >= P.size()) throw PreconditionError("micro_support: index out of range");
  const auto inside = support_inside_spec(d.U);
  for (const PrefixMap* f : {&gamma, &delta}) {
    if (!inside.contains(*f)) throw PreconditionError("micro_support: support not inside the U_i");
    for (const auto& u : d.U)
      if (!leaves_invariant(*f, u)) throw PreconditionError("micro_support: some U_i is not invariant");
  }
  return micro_support_element(gamma, delta, P[l]);
}

MicroSupportCheck verify_micro_support(const PrefixMap& a, const PrefixMap& gamma, const PrefixMap& delta,
                                       const Word& U_l, const Word& W) {
  MicroSupportCheck c;
  c.identity_on_W = identity_on(a, W);
  c.U_invariant = leaves_invariant(a, U_l);
  c.equals_on_U = identity_on(inverse(gamma * inverse(delta)) * a, U_l);
  return c;
}

}  // namespace germlab::dynamics
