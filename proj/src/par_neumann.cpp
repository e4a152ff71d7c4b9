#include "germlab/dynamics/neumann.hpp"

#include "germlab/error.hpp"

namespace germlab::par {

namespace {

using dynamics::CyclicCoset;
using dynamics::SweepSummary;

// Index tuples i_1 < ... < i_k into the coset list, k <= r_max.
void tuples(int m, int r_max, std::vector<int>& cur, int start, std::vector<std::vector<int>>& out) {
  if (!cur.empty()) out.push_back(cur);
  if (static_cast<int>(cur.size()) == r_max) return;
  for (int i = start; i < m; ++i) {
    cur.push_back(i);
    tuples(m, r_max, cur, i + 1, out);
    cur.pop_back();
  }
}

struct Job {
  int n;
  std::vector<int> pick;
};

std::vector<Job> jobs(int n_max, int r_max) {
  std::vector<Job> out;
  for (int n = 1; n <= n_max; ++n) {
    const int m = static_cast<int>(dynamics::cyclic_cosets(n).size());
    std::vector<std::vector<int>> picks;
    std::vector<int> cur;
    tuples(m, r_max, cur, 0, picks);
    for (auto& p : picks) out.push_back({n, std::move(p)});
  }
  return out;
}

// x lies in <d> + rep iff x = rep mod d.
bool oracle_covers(int n, const std::vector<CyclicCoset>& cs) {
  for (int x = 0; x < n; ++x) {
    bool hit = false;
    for (const auto& c : cs) hit = hit || (x - c.rep) % c.d == 0;
    if (!hit) return false;
  }
  return true;
}

SweepSummary run(const Job& job, const dynamics::FiniteGroup& G, const std::vector<CyclicCoset>& all) {
  SweepSummary s;
  s.tuples = 1;
  std::vector<CyclicCoset> cs;
  std::vector<dynamics::Coset> cover;
  for (int i : job.pick) {
    const auto& c = all[static_cast<std::size_t>(i)];
    cs.push_back(c);
    dynamics::Coset k;
    for (int h = 0; h < job.n; h += c.d) k.subgroup.push_back(h);
    k.rep = c.rep;
    cover.push_back(std::move(k));
  }
  const bool covers = oracle_covers(job.n, cs);
  try {
    const auto res = dynamics::neumann_check(G, cover);
    if (!covers) ++s.disagreements;
    ++s.covers;
    if (!res.bound_holds) ++s.violations;
  } catch (const NotACover&) {
    if (covers) ++s.disagreements;
  }
  return s;
}

void add(SweepSummary& a, const SweepSummary& b) {
  a.tuples += b.tuples;
  a.covers += b.covers;
  a.violations += b.violations;
  a.disagreements += b.disagreements;
}

}  // namespace

dynamics::SweepSummary neumann_sweep_serial(int n_max, int r_max) {
  SweepSummary total;
  for (const auto& job : jobs(n_max, r_max))
    add(total, run(job, dynamics::FiniteGroup::cyclic(job.n), dynamics::cyclic_cosets(job.n)));
  return total;
}

dynamics::SweepSummary neumann_sweep(int n_max, int r_max) {
  const auto js = jobs(n_max, r_max);
  std::vector<dynamics::FiniteGroup> groups;
  std::vector<std::vector<CyclicCoset>> cosets;
  for (int n = 0; n <= n_max; ++n) {
    groups.push_back(dynamics::FiniteGroup::cyclic(std::max(n, 1)));
    cosets.push_back(dynamics::cyclic_cosets(std::max(n, 1)));
  }
  std::uint64_t tuples = 0, covers = 0, violations = 0, disagreements = 0;
  const long long count = static_cast<long long>(js.size());
#pragma omp parallel for schedule(dynamic, 64) reduction(+ : tuples, covers, violations, disagreements)
  for (long long i = 0; i < count; ++i) {
    const auto& job = js[static_cast<std::size_t>(i)];
    const auto s = run(job, groups[static_cast<std::size_t>(job.n)], cosets[static_cast<std::size_t>(job.n)]);
    tuples += s.tuples;
    covers += s.covers;
    violations += s.violations;
    disagreements += s.disagreements;
  }
  return {tuples, covers, violations, disagreements};
}

}  // namespace germlab::par
