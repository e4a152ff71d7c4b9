#include "germlab/trees/perm.hpp"

#include "germlab/error.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>

namespace germlab::trees {

Perm::Perm(const std::vector<int>& images) {
  const auto n = images.size();
  if (n > static_cast<std::size_t>(kMaxDegree)) throw PreconditionError("permutation on too many points");
  std::vector<bool> hit(n, false);
  for (std::size_t i = 0; i < n; ++i) {
    const int x = images[i];
    if (x < 0 || static_cast<std::size_t>(x) >= n || hit[static_cast<std::size_t>(x)])
      throw PreconditionError("not a permutation");
    hit[static_cast<std::size_t>(x)] = true;
    img_[i] = static_cast<std::uint8_t>(x);
  }
  n_ = static_cast<std::uint8_t>(n);
}

Perm Perm::identity(int n) {
  std::vector<int> v(static_cast<std::size_t>(n));
  std::iota(v.begin(), v.end(), 0);
  return Perm(v);
}

Perm Perm::cycle(int n) {
  std::vector<int> v(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) v[static_cast<std::size_t>(i)] = (i + 1) % n;
  return Perm(v);
}

Perm Perm::parse_cycles(const std::string& s, int n) {
  std::vector<int> v(static_cast<std::size_t>(n));
  std::iota(v.begin(), v.end(), 0);
  std::vector<bool> used(static_cast<std::size_t>(n), false);
  std::size_t i = 0;
  while (i < s.size()) {
    if (s[i] == ' ') {
      ++i;
      continue;
    }
    if (s[i] != '(') throw ParseError("bad cycle notation: " + s);
    const auto close = s.find(')', i);
    if (close == std::string::npos) throw ParseError("unclosed cycle: " + s);
    std::istringstream in(s.substr(i + 1, close - i - 1));
    std::vector<int> cyc;
    int x;
    while (in >> x) {
      if (x < 0 || x >= n || used[static_cast<std::size_t>(x)]) throw ParseError("bad point in cycle: " + s);
      used[static_cast<std::size_t>(x)] = true;
      cyc.push_back(x);
    }
    if (!in.eof()) throw ParseError("bad cycle notation: " + s);
    for (std::size_t k = 0; k < cyc.size(); ++k) v[static_cast<std::size_t>(cyc[k])] = cyc[(k + 1) % cyc.size()];
    i = close + 1;
  }
  return Perm(v);
}

std::vector<int> Perm::images() const { return {img_.begin(), img_.begin() + n_}; }

bool Perm::is_identity() const {
  for (int i = 0; i < n_; ++i)
    if (img_[static_cast<std::size_t>(i)] != i) return false;
  return true;
}

bool Perm::is_even() const {
  int transpositions = 0;
  std::vector<bool> seen(n_, false);
  for (int i = 0; i < n_; ++i) {
    int len = 0;
    for (int j = i; !seen[static_cast<std::size_t>(j)]; j = img_[static_cast<std::size_t>(j)]) {
      seen[static_cast<std::size_t>(j)] = true;
      ++len;
    }
    if (len > 0) transpositions += len - 1;
  }
  return transpositions % 2 == 0;
}

std::string Perm::str() const {
  std::string out;
  std::vector<bool> seen(n_, false);
  for (int i = 0; i < n_; ++i) {
    if (seen[static_cast<std::size_t>(i)] || img_[static_cast<std::size_t>(i)] == i) continue;
    out += "(";
    for (int j = i; !seen[static_cast<std::size_t>(j)]; j = img_[static_cast<std::size_t>(j)]) {
      seen[static_cast<std::size_t>(j)] = true;
      if (j != i) out += " ";
      out += std::to_string(j);
    }
    out += ")";
  }
  return out.empty() ? "()" : out;
}

Perm operator*(const Perm& p, const Perm& q) {
  if (p.n_ != q.n_) throw PreconditionError("composing permutations of different degree");
  Perm r = p;
  for (int i = 0; i < p.n_; ++i) r.img_[static_cast<std::size_t>(i)] = p.img_[q.img_[static_cast<std::size_t>(i)]];
  return r;
}

Perm inverse(const Perm& p) {
  Perm r = p;
  for (int i = 0; i < p.n_; ++i) r.img_[p.img_[static_cast<std::size_t>(i)]] = static_cast<std::uint8_t>(i);
  return r;
}

Json to_json(const Perm& p) { return Json(p.images()); }

Perm perm_from_json(const Json& j, int n) {
  if (!j.is_array() || static_cast<int>(j.size()) != n) throw ParseError("permutation must be an array of length " + std::to_string(n));
  try {
    return Perm(j.get<std::vector<int>>());
  } catch (const PreconditionError& e) {
    throw ParseError(e.what());
  } catch (const Json::exception& e) {
    throw ParseError(e.what());
  }
}

std::vector<Perm> generated_group(const std::vector<Perm>& gens, int n) {
  std::set<Perm> seen{Perm::identity(n)};
  std::vector<Perm> todo{Perm::identity(n)};
  while (!todo.empty()) {
    const Perm x = todo.back();
    todo.pop_back();
    for (const auto& g : gens) {
      if (g.size() != n) throw PreconditionError("generator of wrong degree");
      Perm y = g * x;
      if (seen.insert(y).second) todo.push_back(y);
    }
  }
  return {seen.begin(), seen.end()};
}

std::vector<Perm> symmetric_group(int n) {
  std::vector<int> v(static_cast<std::size_t>(n));
  std::iota(v.begin(), v.end(), 0);
  std::vector<Perm> out;
  do out.emplace_back(v);
  while (std::next_permutation(v.begin(), v.end()));
  return out;  // already sorted: next_permutation walks lexicographically
}

std::vector<Perm> alternating_group(int n) {
  auto all = symmetric_group(n);
  std::erase_if(all, [](const Perm& p) { return !p.is_even(); });
  return all;
}

PermGroupPair PermGroupPair::make(const std::vector<Perm>& F, const std::vector<Perm>& Fprime, int n) {
  if (n < 2 || n > kMaxDegree) throw PreconditionError("degree out of range");
  PermGroupPair g;
  g.n_ = n;
  g.F_ = generated_group(F, n);
  g.Fp_ = generated_group(Fprime, n);
  if (static_cast<int>(g.F_.size()) != n) throw PreconditionError("F must act freely and transitively (|F| = n)");
  g.match_.assign(static_cast<std::size_t>(n * n), g.F_.size());
  for (std::size_t k = 0; k < g.F_.size(); ++k)
    for (int a = 0; a < n; ++a) {
      auto& slot = g.match_[static_cast<std::size_t>(a * n + g.F_[k](a))];
      if (slot != g.F_.size()) throw PreconditionError("F does not act freely");
      slot = k;
    }
  for (const auto& f : g.F_)
    if (!g.in_Fprime(f)) throw PreconditionError("F is not contained in F'");
  return g;
}

PermGroupPair PermGroupPair::cycle_alt(int n) {
  if (n % 2 == 0) throw PreconditionError("the n-cycle is odd for even n");
  return make({Perm::cycle(n)}, alternating_group(n), n);
}

PermGroupPair PermGroupPair::cycle_sym(int n) { return make({Perm::cycle(n)}, symmetric_group(n), n); }

bool PermGroupPair::in_F(const Perm& p) const { return std::binary_search(F_.begin(), F_.end(), p); }
bool PermGroupPair::in_Fprime(const Perm& p) const { return std::binary_search(Fp_.begin(), Fp_.end(), p); }

bool PermGroupPair::fprime_two_transitive() const {
  std::set<std::pair<int, int>> hit;
  for (const auto& p : Fp_) hit.insert({p(0), p(1)});
  return static_cast<int>(hit.size()) == n_ * (n_ - 1);
}

}  // namespace germlab::trees
