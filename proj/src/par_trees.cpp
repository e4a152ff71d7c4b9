#include "germlab/par/tree_sweeps.hpp"

#include <algorithm>

namespace germlab::par {

using trees::TreeAut;
using trees::Vertex;

namespace {

bool cocycle_holds(const TreeAut& gh, const TreeAut& g, const TreeAut& h, const Vertex& v) {
  return gh.local_perm(v) == g.local_perm(h.act_on(v)) * h.local_perm(v);
}

struct Pair {
  Vertex v, w;
};

std::vector<Pair> level_pair_list(const trees::ColoredTree& T, const Vertex& xi, int depth, int max_distance) {
  const auto ball = T.ball(depth);
  std::vector<int> level;
  for (const auto& v : ball) level.push_back(trees::busemann(T, xi, v));
  std::vector<Pair> out;
  for (std::size_t i = 0; i < ball.size(); ++i)
    for (std::size_t j = i + 1; j < ball.size(); ++j)
      if (level[i] == level[j] && T.distance(ball[i], ball[j]) <= max_distance) out.push_back({ball[i], ball[j]});
  return out;
}

// 0 when the witness fails or throws, else 1 + number of steps.
std::size_t run_pair(const std::shared_ptr<const trees::GffContext>& ctx, const Vertex& xi, int depth, const Pair& p) {
  try {
    const auto wit = trees::level_transitivity_witness(ctx, xi, p.v, p.w, depth);
    return wit.verified ? 1 + wit.steps.size() : 0;
  } catch (const std::exception&) {
    return 0;
  }
}

}  // namespace

std::size_t cocycle_violations(const TreeAut& g, const TreeAut& h, const std::vector<Vertex>& ball) {
  const TreeAut gh = g * h;
  std::size_t bad = 0;
  const auto n = static_cast<long long>(ball.size());
#pragma omp parallel for reduction(+ : bad) schedule(static)
  for (long long i = 0; i < n; ++i)
    if (!cocycle_holds(gh, g, h, ball[static_cast<std::size_t>(i)])) ++bad;
  return bad;
}

std::size_t cocycle_violations_serial(const TreeAut& g, const TreeAut& h, const std::vector<Vertex>& ball) {
  const TreeAut gh = g * h;
  std::size_t bad = 0;
  for (const auto& v : ball)
    if (!cocycle_holds(gh, g, h, v)) ++bad;
  return bad;
}

LevelSweep level_pairs(const std::shared_ptr<const trees::GffContext>& ctx, const Vertex& xi_prefix, int depth,
                       int max_distance) {
  const auto pairs = level_pair_list(ctx->tree, xi_prefix, depth, max_distance);
  std::size_t verified = 0, max_steps = 0;
  const auto n = static_cast<long long>(pairs.size());
#pragma omp parallel for reduction(+ : verified) reduction(max : max_steps) schedule(dynamic, 8)
  for (long long i = 0; i < n; ++i) {
    const auto r = run_pair(ctx, xi_prefix, depth, pairs[static_cast<std::size_t>(i)]);
    if (r > 0) {
      ++verified;
      max_steps = std::max(max_steps, r - 1);
    }
  }
  return {pairs.size(), verified, max_steps};
}

LevelSweep level_pairs_serial(const std::shared_ptr<const trees::GffContext>& ctx, const Vertex& xi_prefix, int depth,
                              int max_distance) {
  LevelSweep s;
  for (const auto& p : level_pair_list(ctx->tree, xi_prefix, depth, max_distance)) {
    ++s.pairs;
    const auto r = run_pair(ctx, xi_prefix, depth, p);
    if (r > 0) {
      ++s.verified;
      s.max_steps = std::max(s.max_steps, r - 1);
    }
  }
  return s;
}

}  // namespace germlab::par
