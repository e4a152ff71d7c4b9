#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

namespace germlab::dynamics {

/// Finite group given by its multiplication table on {0..n-1}.
struct FiniteGroup {
  std::vector<std::vector<int>> table;
  int identity = 0;

  int order() const { return static_cast<int>(table.size()); }
  int mul(int x, int y) const { return table[static_cast<std::size_t>(x)][static_cast<std::size_t>(y)]; }

  static FiniteGroup cyclic(int n);
  /// Symmetric group on 3 letters, elements in lexicographic order of
  /// one-line notation.
  static FiniteGroup s3();
};

/// Right coset subgroup * rep.
struct Coset {
  std::vector<int> subgroup;
  int rep = 0;
};

struct NeumannResult {
  int r = 0;
  int min_index = 0;
  bool bound_holds = false;  // min_index <= r
};

/// Validates each subgroup and the cover, then returns the least index among
/// the covering subgroups. Throws PreconditionError for a non-subgroup and
/// NotACover when the union misses an element.
NeumannResult neumann_check(const FiniteGroup& G, const std::vector<Coset>& cover);

/// Cosets of <d> in Z/n for every divisor d of n, in order of d then rep.
struct CyclicCoset {
  int d = 1;
  int rep = 0;
};
std::vector<CyclicCoset> cyclic_cosets(int n);

struct SweepSummary {
  std::uint64_t tuples = 0;       // coset sets examined
  std::uint64_t covers = 0;       // sets the modular oracle accepts as covers
  std::uint64_t violations = 0;   // covers where the bound fails
  std::uint64_t disagreements = 0;  // oracle and neumann_check disagree on cover-ness
  friend bool operator==(const SweepSummary&, const SweepSummary&) = default;
};

}  // namespace germlab::dynamics

namespace germlab::par {

/// Every set of at most r_max distinct cosets of cyclic subgroups of Z/n,
/// for 1 <= n <= n_max. Each set is first classified by a modular-arithmetic
/// oracle, then passed to neumann_check on the Cayley table.
dynamics::SweepSummary neumann_sweep(int n_max, int r_max);
dynamics::SweepSummary neumann_sweep_serial(int n_max, int r_max);

}  // namespace germlab::par
