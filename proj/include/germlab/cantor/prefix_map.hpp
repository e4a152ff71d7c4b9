#pragma once

#include "germlab/cantor/sequence.hpp"
#include "germlab/exact/json.hpp"

#include <string_view>
#include <utility>
#include <vector>

namespace germlab::cantor {

using Rule = std::pair<Word, Word>;

/// Element of V: w_i x -> z_i x for x in C_{w_i}.
///
/// Kept reduced (no sibling pair w0->u0, w1->u1) with rules sorted by
/// domain word, so two maps are equal iff their rule lists are equal.
class PrefixMap {
 public:
  PrefixMap();  // identity: {"" -> ""}

  /// Validates both codes and reduces. Throws PreconditionError otherwise.
  static PrefixMap from_rules(std::vector<Rule> rules);

  const std::vector<Rule>& rules() const { return rules_; }
  bool is_identity() const;

  /// Image of C_c. Throws NeedsRefinement when c is a proper prefix of a
  /// domain word.
  Word evaluate_on(const Word& c) const;
  /// Image of C_c as a union of cylinders, splitting c as needed.
  std::vector<Word> image(const Word& c) const;
  EventuallyPeriodic operator()(const EventuallyPeriodic& x) const;

  /// Union of the domain cylinders of non-identity rules; this is the
  /// closed support.
  std::vector<Word> support() const;

  friend bool operator==(const PrefixMap&, const PrefixMap&) = default;
  friend auto operator<=>(const PrefixMap&, const PrefixMap&) = default;

  std::string str() const;

 private:
  std::vector<Rule> rules_;
};

/// f o g.
PrefixMap compose(const PrefixMap& f, const PrefixMap& g);
PrefixMap inverse(const PrefixMap& f);
inline PrefixMap operator*(const PrefixMap& f, const PrefixMap& g) { return compose(f, g); }

/// Every w_i set and every z_i set is a complete prefix code.
bool is_complete_prefix_code(const std::vector<Word>& words);
/// Splits every rule whose domain word is in `which` into its two children,
/// without reducing. Used to check confluence of reduction.
std::vector<Rule> refine(const std::vector<Rule>& rules, const std::vector<Word>& which);
/// Sibling-merges to the minimal tree pair and sorts.
std::vector<Rule> reduce(std::vector<Rule> rules);
/// Composition over explicit (unreduced) rule lists.
std::vector<Rule> compose_rules(const std::vector<Rule>& f, const std::vector<Rule>& g);

/// Standard generating set. A and B act as F on the dyadic tree, C is the
/// rotation-type element of T, and P swaps 10 and 110.
///   A = {0->00, 10->01, 11->1}
///   B = {0->0, 10->100, 110->101, 111->11}
///   C = {0->11, 10->0, 11->10}
///   P = {0->0, 10->110, 110->10, 111->111}
const PrefixMap& gen_A();
const PrefixMap& gen_B();
const PrefixMap& gen_C();
const PrefixMap& gen_P();
/// Swap s = {0->1, 1->0}.
const PrefixMap& swap();

/// Word over {a,b,c,p} (upper case = inverse), rightmost letter first.
PrefixMap word(std::string_view letters);

enum class GermClass { fixes_neighbourhood, isolated_fixed_point, moves_x };
std::string_view to_string(GermClass c);

/// Exact germ class of g at an eventually periodic point.
GermClass germ_class(const PrefixMap& g, const EventuallyPeriodic& x);

/// Conjugate copy of g acting on C_c: c w -> c z, identity off C_c.
PrefixMap prefix_translate(const PrefixMap& g, const Word& c);
/// Prefix translates of the standard generators into C_c.
std::vector<PrefixMap> rigid_stabilizer_v(const Word& c);

/// g in V with g(complement of C_w) inside C_u. Requires w non-empty.
PrefixMap compress_v(const Word& w, const Word& u);
/// Exact check that g maps the complement of C_w into C_u.
bool compresses(const PrefixMap& g, const Word& w, const Word& u);

/// Words covering the complement of C_w: the siblings along the path to w.
std::vector<Word> complement_code(const Word& w);

/// {"rules": [["00","0"], ...]}
Json to_json(const PrefixMap& f);
PrefixMap prefix_map_from_json(const Json& j);

}  // namespace germlab::cantor

template <>
struct std::hash<germlab::cantor::PrefixMap> {
  std::size_t operator()(const germlab::cantor::PrefixMap& f) const noexcept;
};
