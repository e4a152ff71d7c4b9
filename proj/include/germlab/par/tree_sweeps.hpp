#pragma once

#include "germlab/trees/levels.hpp"

#include <cstddef>
#include <vector>

namespace germlab::par {

/// Vertices v of `ball` where sigma(gh, v) != sigma(g, hv) sigma(h, v).
std::size_t cocycle_violations(const trees::TreeAut& g, const trees::TreeAut& h,
                               const std::vector<trees::Vertex>& ball);
std::size_t cocycle_violations_serial(const trees::TreeAut& g, const trees::TreeAut& h,
                                      const std::vector<trees::Vertex>& ball);

struct LevelSweep {
  std::size_t pairs = 0;     // v < w in ball(depth), same level, 0 < d(v,w) <= max_distance
  std::size_t verified = 0;
  std::size_t max_steps = 0;
};

LevelSweep level_pairs(const std::shared_ptr<const trees::GffContext>& ctx, const trees::Vertex& xi_prefix, int depth,
                       int max_distance);
LevelSweep level_pairs_serial(const std::shared_ptr<const trees::GffContext>& ctx, const trees::Vertex& xi_prefix,
                              int depth, int max_distance);

}  // namespace germlab::par
