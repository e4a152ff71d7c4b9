#include "germlab/cantor/prefix_map.hpp"

#include "germlab/error.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <map>

namespace germlab::cantor {

namespace {

// Index of the rule whose domain word is a prefix of c, or -1.
// Rules must be sorted by domain and form a prefix code.
std::ptrdiff_t covering_rule(const std::vector<Rule>& rules, const Word& c) {
  auto it = std::upper_bound(rules.begin(), rules.end(), c, [](const Word& x, const Rule& r) { return x < r.first; });
  if (it == rules.begin()) return -1;
  --it;
  return is_prefix(it->first, c) ? it - rules.begin() : -1;
}

char flip(char c) { return c == '0' ? '1' : '0'; }

Word show(const Word& w) { return w.empty() ? "e" : w; }

}  // namespace

bool is_complete_prefix_code(const std::vector<Word>& words) {
  if (words.empty()) return false;
  std::vector<Word> sorted = words;
  std::sort(sorted.begin(), sorted.end());
  for (std::size_t i = 0; i + 1 < sorted.size(); ++i)
    if (is_prefix(sorted[i], sorted[i + 1])) return false;
  Dyadic kraft(0);
  for (const auto& w : sorted) {
    if (!std::all_of(w.begin(), w.end(), [](char c) { return c == '0' || c == '1'; })) return false;
    kraft = kraft + Dyadic::pow2(-static_cast<long long>(w.size()));
  }
  return kraft == Dyadic(1);
}

std::vector<Rule> reduce(std::vector<Rule> rules) {
  std::map<Word, Word> m(rules.begin(), rules.end());
  bool changed = true;
  while (changed) {
    changed = false;
    for (auto it = m.begin(); it != m.end(); ++it) {
      const Word& w = it->first;
      if (w.empty() || w.back() != '0') continue;
      const Word parent = w.substr(0, w.size() - 1);
      auto sib = m.find(parent + '1');
      if (sib == m.end()) continue;
      const Word& z0 = it->second;
      const Word& z1 = sib->second;
      if (z0.empty() || z0.size() != z1.size() || z0.back() != '0' || z1.back() != '1') continue;
      if (z0.compare(0, z0.size() - 1, z1, 0, z1.size() - 1) != 0) continue;
      const Word image = z0.substr(0, z0.size() - 1);
      m.erase(sib);
      m.erase(it);
      m.emplace(parent, image);
      changed = true;
      break;
    }
  }
  return {m.begin(), m.end()};
}

std::vector<Rule> refine(const std::vector<Rule>& rules, const std::vector<Word>& which) {
  std::vector<Rule> out;
  for (const auto& [w, z] : rules) {
    if (std::find(which.begin(), which.end(), w) != which.end()) {
      out.emplace_back(w + '0', z + '0');
      out.emplace_back(w + '1', z + '1');
    } else {
      out.emplace_back(w, z);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Rule> compose_rules(const std::vector<Rule>& f, const std::vector<Rule>& g) {
  std::vector<Rule> fs = f;
  std::sort(fs.begin(), fs.end());
  std::vector<Rule> out;
  for (const auto& [w, z] : g) {
    if (const auto i = covering_rule(fs, z); i >= 0) {
      out.emplace_back(w, fs[i].second + z.substr(fs[i].first.size()));
      continue;
    }
    // z is coarser than f's code: split along f's domain words below z.
    for (auto it = std::lower_bound(fs.begin(), fs.end(), Rule{z, ""}); it != fs.end() && is_prefix(z, it->first); ++it)
      out.emplace_back(w + it->first.substr(z.size()), it->second);
  }
  std::sort(out.begin(), out.end());
  return out;
}

PrefixMap::PrefixMap() : rules_{{"", ""}} {}

PrefixMap PrefixMap::from_rules(std::vector<Rule> rules) {
  std::vector<Word> dom, ran;
  for (const auto& [w, z] : rules) {
    dom.push_back(w);
    ran.push_back(z);
  }
  if (!is_complete_prefix_code(dom)) throw PreconditionError("domain words do not form a complete prefix code");
  if (!is_complete_prefix_code(ran)) throw PreconditionError("range words do not form a complete prefix code");
  PrefixMap f;
  f.rules_ = reduce(std::move(rules));
  return f;
}

bool PrefixMap::is_identity() const { return rules_.size() == 1 && rules_[0].first.empty() && rules_[0].second.empty(); }

Word PrefixMap::evaluate_on(const Word& c) const {
  const auto i = covering_rule(rules_, c);
  if (i < 0) throw NeedsRefinement("cylinder " + show(c) + " is coarser than the domain code");
  return rules_[i].second + c.substr(rules_[i].first.size());
}

std::vector<Word> PrefixMap::image(const Word& c) const {
  if (covering_rule(rules_, c) >= 0) return {evaluate_on(c)};
  std::vector<Word> out;
  for (auto it = std::lower_bound(rules_.begin(), rules_.end(), Rule{c, ""}); it != rules_.end() && is_prefix(c, it->first);
       ++it)
    out.push_back(it->second);
  return out;
}

EventuallyPeriodic PrefixMap::operator()(const EventuallyPeriodic& x) const {
  std::size_t longest = 0;
  for (const auto& r : rules_) longest = std::max(longest, r.first.size());
  const auto i = covering_rule(rules_, x.prefix(longest));
  return x.drop(rules_[i].first.size()).prepend(rules_[i].second);
}

std::vector<Word> PrefixMap::support() const {
  std::vector<Word> out;
  for (const auto& [w, z] : rules_)
    if (w != z) out.push_back(w);
  return out;
}

std::string PrefixMap::str() const {
  std::string s = "{";
  for (std::size_t i = 0; i < rules_.size(); ++i) {
    if (i) s += ", ";
    s += show(rules_[i].first) + "->" + show(rules_[i].second);
  }
  return s + "}";
}

PrefixMap compose(const PrefixMap& f, const PrefixMap& g) {
  return PrefixMap::from_rules(compose_rules(f.rules(), g.rules()));
}

PrefixMap inverse(const PrefixMap& f) {
  std::vector<Rule> rules;
  for (const auto& [w, z] : f.rules()) rules.emplace_back(z, w);
  return PrefixMap::from_rules(std::move(rules));
}

const PrefixMap& gen_A() {
  static const PrefixMap g = PrefixMap::from_rules({{"0", "00"}, {"10", "01"}, {"11", "1"}});
  return g;
}

const PrefixMap& gen_B() {
  static const PrefixMap g = PrefixMap::from_rules({{"0", "0"}, {"10", "100"}, {"110", "101"}, {"111", "11"}});
  return g;
}

const PrefixMap& gen_C() {
  static const PrefixMap g = PrefixMap::from_rules({{"0", "11"}, {"10", "0"}, {"11", "10"}});
  return g;
}

const PrefixMap& gen_P() {
  static const PrefixMap g = PrefixMap::from_rules({{"0", "0"}, {"10", "110"}, {"110", "10"}, {"111", "111"}});
  return g;
}

const PrefixMap& swap() {
  static const PrefixMap g = PrefixMap::from_rules({{"0", "1"}, {"1", "0"}});
  return g;
}

PrefixMap word(std::string_view letters) {
  PrefixMap acc;
  for (auto it = letters.rbegin(); it != letters.rend(); ++it) {
    const PrefixMap* g = nullptr;
    switch (std::tolower(static_cast<unsigned char>(*it))) {
      case 'a': g = &gen_A(); break;
      case 'b': g = &gen_B(); break;
      case 'c': g = &gen_C(); break;
      case 'p': g = &gen_P(); break;
      default: throw ParseError(std::string("letter '") + *it + "' is not a generator of V");
    }
    acc = std::isupper(static_cast<unsigned char>(*it)) ? compose(inverse(*g), acc) : compose(*g, acc);
  }
  return acc;
}

std::string_view to_string(GermClass c) {
  switch (c) {
    case GermClass::fixes_neighbourhood: return "fixes_neighbourhood";
    case GermClass::isolated_fixed_point: return "isolated_fixed_point";
    case GermClass::moves_x: return "moves_x";
  }
  return "?";
}

// On the rule w -> z containing x, g(wy) = zy. If w = z the rule is the
// identity on C_w. Otherwise wy = zy has at most one solution (none when
// |w| = |z|), so a fixed x is the only fixed point in C_w.
GermClass germ_class(const PrefixMap& g, const EventuallyPeriodic& x) {
  for (const auto& [w, z] : g.rules()) {
    if (!x.starts_with(w)) continue;
    if (w == z) return GermClass::fixes_neighbourhood;
    return g(x) == x ? GermClass::isolated_fixed_point : GermClass::moves_x;
  }
  throw PreconditionError("rules do not cover the point");  // unreachable for valid maps
}

std::vector<Word> complement_code(const Word& w) {
  std::vector<Word> out;
  for (std::size_t i = 0; i < w.size(); ++i) out.push_back(w.substr(0, i) + flip(w[i]));
  return out;
}

PrefixMap prefix_translate(const PrefixMap& g, const Word& c) {
  std::vector<Rule> rules;
  for (const auto& [w, z] : g.rules()) rules.emplace_back(c + w, c + z);
  for (const auto& s : complement_code(c)) rules.emplace_back(s, s);
  return PrefixMap::from_rules(std::move(rules));
}

std::vector<PrefixMap> rigid_stabilizer_v(const Word& c) {
  return {prefix_translate(gen_A(), c), prefix_translate(gen_B(), c), prefix_translate(gen_C(), c),
          prefix_translate(gen_P(), c)};
}

// The siblings s_i of the path to w go to u 0^i 1 (i < |w|). What is left of
// the range is u 0^|w| together with the siblings t_j of the path to u; C_w
// is cut into |u|+1 pieces w 0^j 1 (j < |u|) and w 0^|u| to fill it.
PrefixMap compress_v(const Word& w, const Word& u) {
  if (w.empty()) throw PreconditionError("compress_v needs a non-empty word (the complement of C_e is empty)");
  if (u.empty()) return PrefixMap();
  std::vector<Rule> rules;
  const auto sw = complement_code(w);
  for (std::size_t i = 0; i < sw.size(); ++i) rules.emplace_back(sw[i], u + Word(i, '0') + '1');
  const auto tu = complement_code(u);
  for (std::size_t j = 0; j < tu.size(); ++j) rules.emplace_back(w + Word(j, '0') + '1', tu[j]);
  rules.emplace_back(w + Word(u.size(), '0'), u + Word(w.size(), '0'));
  PrefixMap g = PrefixMap::from_rules(std::move(rules));
  if (!compresses(g, w, u)) throw Infeasible("compress_v produced a map that does not compress");
  return g;
}

bool compresses(const PrefixMap& g, const Word& w, const Word& u) {
  for (const auto& s : complement_code(w))
    for (const auto& c : g.image(s))
      if (!is_prefix(u, c)) return false;
  return true;
}

Json to_json(const PrefixMap& f) {
  Json rules = Json::array();
  for (const auto& [w, z] : f.rules()) rules.push_back(Json::array({w, z}));
  return Json{{"rules", rules}};
}

PrefixMap prefix_map_from_json(const Json& j) {
  try {
    std::vector<Rule> rules;
    for (const auto& r : j.at("rules")) {
      if (!r.is_array() || r.size() != 2) throw ParseError("rule must be a pair of words");
      rules.emplace_back(r[0].get<std::string>(), r[1].get<std::string>());
    }
    return PrefixMap::from_rules(std::move(rules));
  } catch (const Json::exception& e) {
    throw ParseError(std::string("bad prefix map: ") + e.what());
  } catch (const PreconditionError& e) {
    throw ParseError(std::string("bad prefix map: ") + e.what());
  }
}

}  // namespace germlab::cantor

std::size_t std::hash<germlab::cantor::PrefixMap>::operator()(const germlab::cantor::PrefixMap& f) const noexcept {
  std::size_t h = 0;
  for (const auto& [w, z] : f.rules())
    h = h * 1000003u ^ (std::hash<std::string>{}(w) * 31u + std::hash<std::string>{}(z));
  return h;
}
