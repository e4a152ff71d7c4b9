#include "germlab/dynamics/neumann.hpp"

#include "germlab/error.hpp"

#include <algorithm>
#include <array>
#include <string>

namespace germlab::dynamics {

FiniteGroup FiniteGroup::cyclic(int n) {
  if (n < 1) throw PreconditionError("cyclic group needs n >= 1");
  FiniteGroup G;
  G.table.assign(static_cast<std::size_t>(n), std::vector<int>(static_cast<std::size_t>(n)));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) G.table[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = (i + j) % n;
  return G;
}

FiniteGroup FiniteGroup::s3() {
  std::vector<std::array<int, 3>> perms;
  std::array<int, 3> p{0, 1, 2};
  do perms.push_back(p);
  while (std::next_permutation(p.begin(), p.end()));
  FiniteGroup G;
  G.table.assign(6, std::vector<int>(6));
  for (std::size_t i = 0; i < 6; ++i)
    for (std::size_t j = 0; j < 6; ++j) {
      std::array<int, 3> c{};
      for (std::size_t k = 0; k < 3; ++k) c[k] = perms[i][static_cast<std::size_t>(perms[j][k])];  // i o j
      G.table[i][j] = static_cast<int>(std::find(perms.begin(), perms.end(), c) - perms.begin());
    }
  return G;
}

NeumannResult neumann_check(const FiniteGroup& G, const std::vector<Coset>& cover) {
  const int n = G.order();
  if (cover.empty()) throw NotACover("empty cover");
  std::vector<bool> hit(static_cast<std::size_t>(n), false);
  NeumannResult res;
  res.r = static_cast<int>(cover.size());
  res.min_index = n;
  for (const auto& c : cover) {
    std::vector<bool> in(static_cast<std::size_t>(n), false);
    for (int h : c.subgroup) {
      if (h < 0 || h >= n) throw PreconditionError("subgroup element out of range");
      in[static_cast<std::size_t>(h)] = true;
    }
    if (!in[static_cast<std::size_t>(G.identity)]) throw PreconditionError("subgroup misses the identity");
    for (int x : c.subgroup)
      for (int y : c.subgroup)
        if (!in[static_cast<std::size_t>(G.mul(x, y))]) throw PreconditionError("subgroup is not closed");
    const int size = static_cast<int>(std::count(in.begin(), in.end(), true));
    res.min_index = std::min(res.min_index, n / size);
    for (int h : c.subgroup) hit[static_cast<std::size_t>(G.mul(h, c.rep))] = true;
  }
  if (std::find(hit.begin(), hit.end(), false) != hit.end()) throw NotACover("the cosets miss part of the group");
  res.bound_holds = res.min_index <= res.r;
  return res;
}

std::vector<CyclicCoset> cyclic_cosets(int n) {
  std::vector<CyclicCoset> out;
  for (int d = 1; d <= n; ++d)
    if (n % d == 0)
      for (int rep = 0; rep < d; ++rep) out.push_back({d, rep});
  return out;
}

}  // namespace germlab::dynamics
