#pragma once

#include "germlab/trees/tree_aut.hpp"

#include <optional>
#include <vector>

namespace germlab::trees {

/// Busemann function of the end through the finite ray o, xi_1, xi_1 xi_2, ...
/// b(v) = d(v, p) - d(o, p) with p the projection of v on the ray. Throws
/// PreconditionError when the prefix does not determine p (v runs along
/// the whole prefix and beyond).
int busemann(const ColoredTree& T, const Vertex& xi_prefix, const Vertex& v);
/// The unique neighbour of v one level down.
Vertex lower_neighbour(const ColoredTree& T, const Vertex& xi_prefix, const Vertex& v);

struct EllipticGerm {
  bool fixes_half_tree = false;  // false means pending
  int edge_index = -1;           // edge (v_n, v_{n+1}) of the ray prefix
  Vertex edge_from, edge_to;     // the half-tree is the side of edge_to
  std::size_t checked = 0;       // half-tree vertices within depth checked fixed
  bool verified = false;
};

/// Along the rooted ray with vertices v_i = ray_prefix[0..i), finds the
/// first edge (v_n, v_{n+1}) with both ends fixed and v_{n+1} outside the
/// exception radius. Beyond it every local permutation is an element of F
/// fixing the colour pointing back, hence trivial, so g fixes the half-tree
/// of v_{n+1}. That half-tree is then checked pointwise up to `depth`.
/// Throws PreconditionError if g moves the last prefix vertex or has
/// exceptions deeper than `depth`.
EllipticGerm elliptic_germ_check(const TreeAut& g, const Vertex& ray_prefix, int depth);

struct LevelWitness {
  std::vector<TreeAut> steps;  // w = steps.back() ... steps.front() (v)
  std::vector<Vertex> trail;   // v, g_1 v, g_2 g_1 v, ...
  bool verified = false;       // trail ends at w and every step fixes the prefix end
};

/// The element with local permutation p at m fixing pointwise the
/// half-tree behind the edge from m along colour a. Needs p(a) = a.
TreeAut half_tree_fixator(const std::shared_ptr<const GffContext>& ctx, const Vertex& m, int a, const Perm& p);

/// Moves v to w inside the stabiliser of the end by induction on
/// d(v, w) = 2n: at the midpoint m use p in F'_a (a the colour towards m_-)
/// sending the colour towards v to the colour towards w. Throws Infeasible
/// if F' is not 2-transitive and PreconditionError if v, w are on
/// different levels, deeper than `depth`, or depth >= |xi_prefix|.
LevelWitness level_transitivity_witness(const std::shared_ptr<const GffContext>& ctx, const Vertex& xi_prefix,
                                        const Vertex& v, const Vertex& w, int depth);

}  // namespace germlab::trees
