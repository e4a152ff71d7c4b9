#pragma once

#include "germlab/fullgroup/odometer.hpp"

#include <optional>
#include <ostream>
#include <utility>
#include <vector>

namespace germlab::fullgroup {

/// Largest |s| in the symmetric set S = T u -T from return_set, at least 1
/// so that S generates Z.
int cayley_step(const Clopen& U);

/// Finite window of Delta_x = {n : x + n in U} inside Cay(Z, [-step, step]).
struct SchreierPatch {
  Clopen U;
  EventuallyPeriodic x{"", "0"};
  int step = 1;
  int radius = 0;
  std::vector<std::int64_t> vertices;                      // increasing offsets n
  std::vector<std::pair<std::size_t, std::size_t>> edges;  // i < j, ambient distance <= 3
  std::vector<std::vector<std::size_t>> adjacency;

  /// Word metric of Z for S = [-step, step].
  std::int64_t ambient(std::size_t i, std::size_t j) const;
};

/// Throws PreconditionError unless x is in U and step >= 1.
SchreierPatch schreier_patch(const Clopen& U, int step, const EventuallyPeriodic& x, int radius);

/// Edges {n, m} of the orbital Schreier graph of the gamma_{t,V} generators
/// on the offsets of the patch, loops dropped, as vertex index pairs i < j.
std::vector<std::pair<std::size_t, std::size_t>> orbital_schreier_edges(const SchreierPatch& p);

struct QIViolation {
  std::int64_t y, z;
  std::int64_t d;
  std::optional<std::int64_t> delta;  // empty when z is unreachable
};

struct QIReport {
  std::size_t interior = 0;  // vertices with |n| <= radius - margin
  std::size_t pairs = 0;
  std::vector<QIViolation> violations;
  Rational max_ratio{0};  // max d / delta over interior pairs
  Rational min_ratio{0};  // min d / delta
  bool one_dense = false;
  int margin = 0;
};

/// Checks delta <= d <= 3 delta over interior pairs and 1-density of the
/// vertices in [-(radius - step), radius - step]. margin < 0 means
/// 3 * radius / 4.
QIReport quasi_isometry_check(const SchreierPatch& p, int margin = -1);

/// {"interior": .., "pairs": .., "violations": [..], "max_ratio": "p/q", ...}
Json to_json(const QIReport& r);
void write_dot(std::ostream& out, const SchreierPatch& p);

}  // namespace germlab::fullgroup
