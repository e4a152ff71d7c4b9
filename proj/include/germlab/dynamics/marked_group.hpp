#pragma once

#include "germlab/error.hpp"
#include "germlab/par/ball_layer.hpp"

#include <algorithm>
#include <cstdlib>
#include <functional>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace germlab::dynamics {

/// Element budget for ball enumeration: GERMLAB_BUDGET if set, else 200000.
std::size_t default_budget();

/// A group given by a kernel element type and a labelled generating set.
///
/// E needs operator* (composition), inverse(E), a default constructor giving
/// the identity, and a total order consistent with equality.
template <class E>
struct MarkedGroup {
  std::string name;
  std::vector<par::Entry<E>> gens;  // closed under inverses; labels are words

  /// Adds the inverse of each generator under the upper-cased label, or
  /// label + "'" when upper-casing changes nothing.
  static MarkedGroup with_inverses(std::string name, const std::vector<std::pair<std::string, E>>& gens) {
    MarkedGroup g{std::move(name), {}};
    for (const auto& [label, e] : gens) {
      if (e == E()) throw PreconditionError("generator " + label + " is the identity");
      g.gens.push_back({e, label});
    }
    for (const auto& [label, e] : gens) {
      std::string inv = label;
      for (auto& c : inv) c = static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
      if (inv == label) inv += "'";
      g.gens.push_back({inverse(e), inv});
    }
    return g;
  }
};

/// Distinct elements of word length <= radius in BFS order, each with a
/// shortest word and its length.
template <class E>
struct BallTruncation {
  int radius = 0;
  std::vector<par::Entry<E>> entries;
  std::vector<int> lengths;

  std::size_t size() const { return entries.size(); }
  std::set<E> set(int r) const {
    std::set<E> s;
    for (std::size_t i = 0; i < entries.size() && lengths[i] <= r; ++i) s.insert(entries[i].element);
    return s;
  }
};

template <class E>
BallTruncation<E> ball(const MarkedGroup<E>& G, int r, std::size_t budget = default_budget(), bool parallel = true) {
  if (r < 0) throw PreconditionError("ball radius must be non-negative");
  BallTruncation<E> b;
  b.radius = r;
  std::set<E> seen{E()};
  std::vector<par::Entry<E>> frontier{{E(), ""}};
  b.entries = frontier;
  b.lengths = {0};
  for (int len = 1; len <= r; ++len) {
    frontier = parallel ? par::expand_layer(frontier, G.gens, seen) : par::expand_layer_serial(frontier, G.gens, seen);
    if (seen.size() > budget)
      throw BudgetExceeded("ball of radius " + std::to_string(len) + " in " + G.name + " passed the budget of " +
                           std::to_string(budget) + " elements");
    for (auto& e : frontier) {
      b.entries.push_back(e);
      b.lengths.push_back(len);
    }
  }
  return b;
}

/// A subgroup given by a decidable membership predicate.
template <class E>
struct SubgroupSpec {
  std::string name;
  std::function<bool(const E&)> contains;
};

template <class E>
SubgroupSpec<E> whole() {
  return {"whole", [](const E&) { return true; }};
}

template <class E>
SubgroupSpec<E> trivial() {
  return {"trivial", [](const E& e) { return e == E(); }};
}

/// g H g^-1, decided by k in gHg^-1 iff g^-1 k g in H.
template <class E>
SubgroupSpec<E> conjugate(const SubgroupSpec<E>& h, const E& g, const std::string& g_name = "g") {
  const E gi = inverse(g);
  return {g_name + "." + h.name + "." + g_name + "^-1", [h, g, gi](const E& k) { return h.contains(gi * k * g); }};
}

/// Membership in <gens> decided by search among words of length <= radius
/// in those generators: sound for positives, bounded for negatives.
template <class E>
SubgroupSpec<E> finitely_generated(const std::string& name, const std::vector<std::pair<std::string, E>>& gens,
                                   int radius) {
  auto members = std::make_shared<std::set<E>>(ball(MarkedGroup<E>::with_inverses(name, gens), radius).set(radius));
  return {name, [members](const E& e) { return members->count(e) > 0; }};
}

template <class E>
std::vector<par::Entry<E>> chabauty_trunc(const SubgroupSpec<E>& h, const BallTruncation<E>& b, int r) {
  std::vector<par::Entry<E>> out;
  for (std::size_t i = 0; i < b.size() && b.lengths[i] <= r; ++i)
    if (h.contains(b.entries[i].element)) out.push_back(b.entries[i]);
  return out;
}

template <class E>
std::vector<par::Entry<E>> chabauty_trunc(const SubgroupSpec<E>& h, const MarkedGroup<E>& G, int r) {
  return chabauty_trunc(h, ball(G, r), r);
}

/// Largest r <= r_max with H and K meeting ball(r) in the same set; the
/// truncated Chabauty distance is 2^-r. `witness` receives the first
/// element (in BFS order) on which they disagree, if any.
template <class E>
int chabauty_agree_radius(const SubgroupSpec<E>& h, const SubgroupSpec<E>& k, const BallTruncation<E>& b,
                          std::optional<par::Entry<E>>* witness = nullptr) {
  for (std::size_t i = 0; i < b.size(); ++i) {
    if (h.contains(b.entries[i].element) != k.contains(b.entries[i].element)) {
      if (witness) *witness = b.entries[i];
      return b.lengths[i] - 1;
    }
  }
  return b.radius;
}

struct NetReport {
  std::vector<bool> matches;          // truncation of g_n H g_n^-1 equals the prediction
  std::vector<std::size_t> sizes;     // sizes of those truncations
  std::size_t predicted_size = 0;
  std::optional<int> stabilized_at;   // least n (1-based) from which every later n matches
};

/// Compares the radius-r truncations of g_n H g_n^-1 with the predicted
/// limit along the net.
template <class E>
NetReport conjugate_net_probe(const SubgroupSpec<E>& h, const std::vector<E>& conjugators,
                              const SubgroupSpec<E>& predicted, const BallTruncation<E>& b, int r) {
  NetReport rep;
  const auto target = chabauty_trunc(predicted, b, r);
  rep.predicted_size = target.size();
  std::set<E> want;
  for (const auto& e : target) want.insert(e.element);
  for (std::size_t n = 0; n < conjugators.size(); ++n) {
    const auto got = chabauty_trunc(conjugate(h, conjugators[n]), b, r);
    std::set<E> have;
    for (const auto& e : got) have.insert(e.element);
    rep.sizes.push_back(got.size());
    rep.matches.push_back(have == want);
  }
  for (std::size_t n = conjugators.size(); n > 0 && rep.matches[n - 1]; --n) rep.stabilized_at = static_cast<int>(n);
  return rep;
}

/// Searches ball(search_radius) for g with g P g^-1 disjoint from H. An
/// empty result means every tested conjugate of P meets H.
template <class E>
std::optional<par::Entry<E>> accumulation_probe(const SubgroupSpec<E>& h, const BallTruncation<E>& b,
                                                const std::vector<E>& P) {
  for (const auto& p : P)
    if (p == E()) throw PreconditionError("P must not contain the identity");
  for (const auto& g : b.entries) {
    const E gi = inverse(g.element);
    const bool misses = std::none_of(P.begin(), P.end(), [&](const E& p) { return h.contains(g.element * p * gi); });
    if (misses) return g;
  }
  return std::nullopt;
}

/// a = (gamma g^-1 gamma^-1)(delta g delta^-1).
template <class E>
E micro_support_element(const E& gamma, const E& delta, const E& g) {
  return gamma * inverse(g) * inverse(gamma) * (delta * g * inverse(delta));
}

}  // namespace germlab::dynamics
