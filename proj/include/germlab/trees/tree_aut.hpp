#pragma once

#include "germlab/trees/perm.hpp"
#include "germlab/rng.hpp"

#include <map>
#include <memory>
#include <string>
#include <vector>

namespace germlab::trees {

/// Reduced colour word from the base vertex o, one char '0'+c per edge.
/// The empty word is o.
using Vertex = std::string;

/// The d-regular tree with the colouring in which the edge v -- v.c has
/// colour c at both ends. Vertices are reduced colour words.
struct ColoredTree {
  int degree = 0;

  /// The neighbour of v along colour c.
  Vertex step(const Vertex& v, int c) const;
  bool is_vertex(const Vertex& v) const;
  /// Accepts "o" or "" for the base vertex. Throws ParseError.
  Vertex parse(const std::string& s) const;
  int distance(const Vertex& v, const Vertex& w) const;
  /// Colours of the edges of the geodesic from v to w, in order.
  std::vector<int> path(const Vertex& v, const Vertex& w) const;
  /// Colour of the edge between adjacent u and v.
  int colour_between(const Vertex& u, const Vertex& v) const;
  /// Vertices at distance <= r from o in shortlex order.
  std::vector<Vertex> ball(int r) const;
};

/// Tree plus permutation groups; shared by the elements built on it.
struct GffContext {
  ColoredTree tree;
  PermGroupPair groups;

  /// Omega = {0..4}, F = <(0 1 2 3 4)>, F' = Alt(5).
  static std::shared_ptr<const GffContext> standard();
  static std::shared_ptr<const GffContext> make(PermGroupPair groups);
};

/// Element of G(F,F') given by the image of o, the local permutation at o
/// and a finite map of F'-valued local permutations.
///
/// Local permutations propagate outward from o: a vertex without an entry
/// takes the unique element of F agreeing with its parent's local
/// permutation on the colour of the connecting edge. So outside the
/// exception set every local permutation lies in F, though not all equal
/// to the default. Canonical form: exceptions are exactly the vertices with
/// local permutation outside F, and `default` is the local permutation at
/// o when that lies in F (otherwise the element of F agreeing with it at 0).
class TreeAut {
 public:
  TreeAut();  // identity over GffContext::standard()

  /// Checks membership in F and F', and that every exception agrees with
  /// the propagated local permutation of its parent on the edge between
  /// them. An exception at o overrides `deflt`. Throws PreconditionError.
  static TreeAut make(std::shared_ptr<const GffContext> ctx, Vertex base_image, Perm deflt,
                      std::map<Vertex, Perm> exceptions);
  /// Same data with propagation outward from `anchor` instead of o.
  static TreeAut propagate_from(std::shared_ptr<const GffContext> ctx, const Vertex& anchor, const Vertex& anchor_image,
                                const Perm& anchor_sigma, std::map<Vertex, Perm> exceptions);

  const GffContext& context() const { return *ctx_; }
  const std::shared_ptr<const GffContext>& context_ptr() const { return ctx_; }
  const Vertex& base_image() const { return base_; }
  const Perm& default_perm() const { return default_; }
  const std::map<Vertex, Perm>& exceptions() const { return exc_; }
  /// Largest length of an exception vertex; 0 without exceptions.
  int exception_radius() const;

  Vertex act_on(const Vertex& v) const;
  Vertex act_inverse(const Vertex& w) const;
  /// sigma(g, v).
  Perm local_perm(const Vertex& v) const;
  bool is_identity() const { return base_.empty() && default_.is_identity() && exc_.empty(); }

  std::string str() const;

  friend bool operator==(const TreeAut& a, const TreeAut& b) {
    return a.base_ == b.base_ && a.default_ == b.default_ && a.exc_ == b.exc_;
  }
  friend std::strong_ordering operator<=>(const TreeAut& a, const TreeAut& b);

 private:
  std::shared_ptr<const GffContext> ctx_;
  Vertex base_;
  Perm default_;
  std::map<Vertex, Perm> exc_;
};

/// g o h.
TreeAut compose(const TreeAut& g, const TreeAut& h);
TreeAut inverse(const TreeAut& g);
inline TreeAut operator*(const TreeAut& g, const TreeAut& h) { return compose(g, h); }

/// Random element: base image and exceptions within distance `radius` of o.
TreeAut random_tree_aut(const std::shared_ptr<const GffContext>& ctx, Rng& rng, int radius, int max_exceptions);

/// {"base_image": w, "default": [..], "exceptions": {w: [..]}}
Json to_json(const TreeAut& g);
TreeAut tree_aut_from_json(const std::shared_ptr<const GffContext>& ctx, const Json& j);

}  // namespace germlab::trees
