#include "germlab/trees/levels.hpp"

#include "germlab/error.hpp"

namespace germlab::trees {

namespace {

std::size_t common_prefix(const Vertex& v, const Vertex& w) {
  std::size_t i = 0;
  while (i < v.size() && i < w.size() && v[i] == w[i]) ++i;
  return i;
}

}  // namespace

int busemann(const ColoredTree& T, const Vertex& xi_prefix, const Vertex& v) {
  if (!T.is_vertex(xi_prefix) || !T.is_vertex(v)) throw PreconditionError("not a vertex");
  const auto l = common_prefix(v, xi_prefix);
  if (l == xi_prefix.size() && v.size() > l)
    throw PreconditionError("projection of " + v + " on the ray is beyond the prefix " + xi_prefix);
  return static_cast<int>(v.size()) - 2 * static_cast<int>(l);
}

Vertex lower_neighbour(const ColoredTree& T, const Vertex& xi_prefix, const Vertex& v) {
  busemann(T, xi_prefix, v);
  const auto l = common_prefix(v, xi_prefix);
  if (l < v.size()) return v.substr(0, v.size() - 1);
  if (v.size() == xi_prefix.size()) throw PreconditionError("lower neighbour of the prefix end is not determined");
  return xi_prefix.substr(0, v.size() + 1);
}

EllipticGerm elliptic_germ_check(const TreeAut& g, const Vertex& ray_prefix, int depth) {
  const auto& T = g.context().tree;
  if (!T.is_vertex(ray_prefix)) throw PreconditionError("ray prefix is not a reduced colour word");
  const int n0 = g.exception_radius();
  if (n0 > depth) throw PreconditionError("exceptions lie outside the explored ball");
  const int m = static_cast<int>(ray_prefix.size());
  std::vector<bool> fixed(static_cast<std::size_t>(m + 1));
  for (int i = 0; i <= m; ++i) {
    const Vertex v = ray_prefix.substr(0, static_cast<std::size_t>(i));
    fixed[static_cast<std::size_t>(i)] = g.act_on(v) == v;
  }
  if (!fixed[static_cast<std::size_t>(m)]) throw PreconditionError("g does not fix the end of the ray prefix");
  int i0 = m;
  while (i0 > 0 && fixed[static_cast<std::size_t>(i0 - 1)]) --i0;

  EllipticGerm out;
  const int n = std::max(n0, i0);
  if (n + 1 > m) return out;  // pending
  out.fixes_half_tree = true;
  out.edge_index = n;
  out.edge_from = ray_prefix.substr(0, static_cast<std::size_t>(n));
  out.edge_to = ray_prefix.substr(0, static_cast<std::size_t>(n + 1));
  out.verified = true;
  // Descendants of edge_to, which form its half-tree.
  std::vector<Vertex> todo;
  if (static_cast<int>(out.edge_to.size()) <= depth) todo.push_back(out.edge_to);
  while (!todo.empty()) {
    const Vertex u = std::move(todo.back());
    todo.pop_back();
    ++out.checked;
    if (g.act_on(u) != u) out.verified = false;
    if (static_cast<int>(u.size()) == depth) continue;
    for (int c = 0; c < T.degree; ++c)
      if (u.back() != '0' + c) todo.push_back(u + static_cast<char>('0' + c));
  }
  return out;
}

TreeAut half_tree_fixator(const std::shared_ptr<const GffContext>& ctx, const Vertex& m, int a, const Perm& p) {
  if (p(a) != a) throw PreconditionError("local permutation must fix the colour of the fixed edge");
  return TreeAut::propagate_from(ctx, m, m, p, {});
}

LevelWitness level_transitivity_witness(const std::shared_ptr<const GffContext>& ctx, const Vertex& xi_prefix,
                                        const Vertex& v, const Vertex& w, int depth) {
  const auto& T = ctx->tree;
  const auto& G = ctx->groups;
  if (!G.fprime_two_transitive()) throw Infeasible("F' is not 2-transitive");
  if (depth >= static_cast<int>(xi_prefix.size())) throw PreconditionError("depth must be below the prefix length");
  if (static_cast<int>(v.size()) > depth || static_cast<int>(w.size()) > depth)
    throw PreconditionError("vertices outside the ball of the given depth");
  const int k = busemann(T, xi_prefix, v);
  if (busemann(T, xi_prefix, w) != k) throw PreconditionError("v and w lie on different levels");

  LevelWitness out;
  out.trail.push_back(v);
  Vertex cur = v;
  bool ok = true;
  while (cur != w) {
    const int d = T.distance(cur, w);
    const auto path = T.path(cur, w);
    Vertex mid = cur;
    for (int i = 0; i < d / 2; ++i) mid = T.step(mid, path[static_cast<std::size_t>(i)]);
    const int a = T.colour_between(mid, lower_neighbour(T, xi_prefix, mid));
    const int cx = T.path(mid, cur).front();
    const int cy = T.path(mid, w).front();
    const Perm* pick = nullptr;
    for (const auto& p : G.Fprime())
      if (p(a) == a && p(cx) == cy) {
        pick = &p;
        break;
      }
    if (!pick) throw Infeasible("no element of F' fixes " + std::to_string(a) + " and moves " + std::to_string(cx) +
                                " to " + std::to_string(cy));
    TreeAut g = half_tree_fixator(ctx, mid, a, *pick);
    cur = g.act_on(cur);
    ok = ok && g.act_on(xi_prefix) == xi_prefix && T.distance(cur, w) <= d - 2 && busemann(T, xi_prefix, cur) == k;
    out.steps.push_back(std::move(g));
    out.trail.push_back(cur);
    if (!ok) break;
  }
  // Independent re-check: apply the steps to v from scratch.
  Vertex x = v;
  for (const auto& g : out.steps) x = g.act_on(x);
  out.verified = ok && x == w;
  return out;
}

}  // namespace germlab::trees
