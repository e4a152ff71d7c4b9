#include "germlab/trees/tree_aut.hpp"

#include "germlab/error.hpp"

#include <algorithm>
#include <set>

namespace germlab::trees {

// ------------------------------------------------------------ tree

Vertex ColoredTree::step(const Vertex& v, int c) const {
  const char ch = static_cast<char>('0' + c);
  if (!v.empty() && v.back() == ch) return v.substr(0, v.size() - 1);
  return v + ch;
}

bool ColoredTree::is_vertex(const Vertex& v) const {
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v[i] < '0' || v[i] >= '0' + degree) return false;
    if (i > 0 && v[i] == v[i - 1]) return false;
  }
  return true;
}

Vertex ColoredTree::parse(const std::string& s) const {
  const Vertex v = s == "o" ? Vertex() : s;
  if (!is_vertex(v)) throw ParseError("not a reduced colour word: " + s);
  return v;
}

namespace {

std::size_t common_prefix(const Vertex& v, const Vertex& w) {
  std::size_t i = 0;
  while (i < v.size() && i < w.size() && v[i] == w[i]) ++i;
  return i;
}

}  // namespace

int ColoredTree::distance(const Vertex& v, const Vertex& w) const {
  const auto l = common_prefix(v, w);
  return static_cast<int>(v.size() + w.size() - 2 * l);
}

std::vector<int> ColoredTree::path(const Vertex& v, const Vertex& w) const {
  const auto l = common_prefix(v, w);
  std::vector<int> out;
  for (std::size_t i = v.size(); i > l; --i) out.push_back(v[i - 1] - '0');
  for (std::size_t i = l; i < w.size(); ++i) out.push_back(w[i] - '0');
  return out;
}

int ColoredTree::colour_between(const Vertex& u, const Vertex& v) const {
  if (distance(u, v) != 1) throw PreconditionError("vertices are not adjacent");
  return (u.size() > v.size() ? u.back() : v.back()) - '0';
}

std::vector<Vertex> ColoredTree::ball(int r) const {
  std::vector<Vertex> out{Vertex()};
  std::size_t layer = 0;
  for (int len = 1; len <= r; ++len) {
    const std::size_t end = out.size();
    for (std::size_t i = layer; i < end; ++i)
      for (int c = 0; c < degree; ++c) {
        const Vertex& v = out[i];
        if (!v.empty() && v.back() == '0' + c) continue;
        out.push_back(v + static_cast<char>('0' + c));
      }
    layer = end;
  }
  return out;
}

std::shared_ptr<const GffContext> GffContext::standard() {
  static const auto ctx = make(PermGroupPair::cycle_alt(5));
  return ctx;
}

std::shared_ptr<const GffContext> GffContext::make(PermGroupPair groups) {
  auto c = std::make_shared<GffContext>();
  c->tree.degree = groups.degree();
  c->groups = std::move(groups);
  return c;
}

// ------------------------------------------------------------ walking

namespace {

// A vertex, its image and the local permutation there.
struct Cursor {
  Vertex at, image;
  Perm sigma;
};

void advance(const GffContext& ctx, const std::map<Vertex, Perm>& exc, Cursor& cur, int c) {
  const int c_img = cur.sigma(c);
  Vertex next = ctx.tree.step(cur.at, c);
  cur.image = ctx.tree.step(cur.image, c_img);
  if (auto it = exc.find(next); it != exc.end()) {
    if (it->second(c) != c_img)
      throw PreconditionError("local permutation at " + (next.empty() ? std::string("o") : next) +
                              " disagrees with its neighbour on colour " + std::to_string(c));
    cur.sigma = it->second;
  } else {
    cur.sigma = ctx.groups.f_match(c, c_img);
  }
  cur.at = std::move(next);
}

void walk(const GffContext& ctx, const std::map<Vertex, Perm>& exc, Cursor& cur, const std::vector<int>& colours) {
  for (int c : colours) advance(ctx, exc, cur, c);
}

std::vector<int> letters(const Vertex& v) {
  std::vector<int> out;
  for (char ch : v) out.push_back(ch - '0');
  return out;
}

}  // namespace

// ------------------------------------------------------------ TreeAut

TreeAut::TreeAut() : ctx_(GffContext::standard()), default_(Perm::identity(ctx_->tree.degree)) {}

TreeAut TreeAut::make(std::shared_ptr<const GffContext> ctx, Vertex base_image, Perm deflt,
                      std::map<Vertex, Perm> exceptions) {
  if (!ctx) throw PreconditionError("missing tree context");
  const auto& T = ctx->tree;
  const auto& G = ctx->groups;
  if (!T.is_vertex(base_image)) throw PreconditionError("base image is not a vertex");
  if (deflt.size() != T.degree || !G.in_F(deflt)) throw PreconditionError("default must lie in F");
  for (const auto& [v, p] : exceptions) {
    if (!T.is_vertex(v)) throw PreconditionError("exception key is not a vertex: " + v);
    if (p.size() != T.degree || !G.in_Fprime(p)) throw PreconditionError("exception at " + v + " is not in F'");
  }
  const Perm root = exceptions.count("") ? exceptions.at("") : deflt;
  // Keys are in lexicographic order, so ancestors are checked first.
  for (const auto& [v, p] : exceptions) {
    Cursor cur{"", base_image, root};
    walk(*ctx, exceptions, cur, letters(v));
  }
  TreeAut g;
  g.ctx_ = std::move(ctx);
  g.base_ = std::move(base_image);
  std::erase_if(exceptions, [&](const auto& kv) { return G.in_F(kv.second); });
  g.default_ = G.in_F(root) ? root : G.f_match(0, root(0));
  g.exc_ = std::move(exceptions);
  return g;
}

TreeAut TreeAut::propagate_from(std::shared_ptr<const GffContext> ctx, const Vertex& anchor, const Vertex& anchor_image,
                                const Perm& anchor_sigma, std::map<Vertex, Perm> exceptions) {
  if (!ctx) throw PreconditionError("missing tree context");
  const auto& T = ctx->tree;
  if (!T.is_vertex(anchor) || !T.is_vertex(anchor_image)) throw PreconditionError("anchor is not a vertex");
  if (anchor_sigma.size() != T.degree || !ctx->groups.in_Fprime(anchor_sigma))
    throw PreconditionError("anchor permutation is not in F'");
  if (auto it = exceptions.find(anchor); it != exceptions.end() && it->second != anchor_sigma)
    throw PreconditionError("anchor permutation conflicts with the exception map");
  if (!ctx->groups.in_F(anchor_sigma)) exceptions[anchor] = anchor_sigma;
  for (const auto& [v, p] : exceptions) {
    if (!T.is_vertex(v)) throw PreconditionError("exception key is not a vertex: " + v);
    Cursor cur{anchor, anchor_image, anchor_sigma};
    walk(*ctx, exceptions, cur, T.path(anchor, v));
  }
  Cursor cur{anchor, anchor_image, anchor_sigma};
  walk(*ctx, exceptions, cur, T.path(anchor, ""));
  if (!exceptions.count("")) exceptions[""] = cur.sigma;
  return make(std::move(ctx), cur.image, Perm::identity(T.degree), std::move(exceptions));
}

int TreeAut::exception_radius() const {
  std::size_t r = 0;
  for (const auto& kv : exc_) r = std::max(r, kv.first.size());
  return static_cast<int>(r);
}

Vertex TreeAut::act_on(const Vertex& v) const {
  Cursor cur{"", base_, local_perm("")};
  walk(*ctx_, exc_, cur, letters(v));
  return cur.image;
}

Vertex TreeAut::act_inverse(const Vertex& w) const {
  Cursor cur{"", base_, local_perm("")};
  for (int c : ctx_->tree.path(base_, w)) advance(*ctx_, exc_, cur, inverse(cur.sigma)(c));
  return cur.at;
}

Perm TreeAut::local_perm(const Vertex& v) const {
  if (v.empty()) {
    auto it = exc_.find("");
    return it == exc_.end() ? default_ : it->second;
  }
  Cursor cur{"", base_, local_perm("")};
  walk(*ctx_, exc_, cur, letters(v));
  return cur.sigma;
}

std::string TreeAut::str() const {
  std::string s = "o->" + (base_.empty() ? std::string("o") : base_) + " default " + default_.str();
  for (const auto& [v, p] : exc_) s += ", " + (v.empty() ? std::string("o") : v) + ":" + p.str();
  return s;
}

std::strong_ordering operator<=>(const TreeAut& a, const TreeAut& b) {
  if (auto c = a.base_ <=> b.base_; c != 0) return c;
  if (auto c = a.default_ <=> b.default_; c != 0) return c;
  return a.exc_ <=> b.exc_;
}

namespace {

void same_context(const TreeAut& g, const TreeAut& h) {
  if (g.context_ptr() != h.context_ptr() && !(g.context().groups == h.context().groups))
    throw PreconditionError("tree automorphisms over different (Omega, F, F')");
}

}  // namespace

TreeAut compose(const TreeAut& g, const TreeAut& h) {
  same_context(g, h);
  std::set<Vertex> candidates{""};
  for (const auto& kv : h.exceptions()) candidates.insert(kv.first);
  for (const auto& kv : g.exceptions()) candidates.insert(h.act_inverse(kv.first));
  std::map<Vertex, Perm> exc;
  for (const auto& v : candidates) exc[v] = g.local_perm(h.act_on(v)) * h.local_perm(v);
  const auto& G = g.context().groups;
  return TreeAut::make(g.context_ptr(), g.act_on(h.base_image()), Perm::identity(G.degree()), std::move(exc));
}

TreeAut inverse(const TreeAut& g) {
  const Vertex base = g.act_inverse("");
  std::map<Vertex, Perm> exc;
  exc[""] = inverse(g.local_perm(base));
  for (const auto& [v, p] : g.exceptions()) exc[g.act_on(v)] = inverse(p);
  return TreeAut::make(g.context_ptr(), base, Perm::identity(g.context().tree.degree), std::move(exc));
}

TreeAut random_tree_aut(const std::shared_ptr<const GffContext>& ctx, Rng& rng, int radius, int max_exceptions) {
  const auto& T = ctx->tree;
  const auto& G = ctx->groups;
  const auto ball = T.ball(radius);
  const Vertex base = ball[rng.below(ball.size())];
  const Perm deflt = G.F()[rng.below(G.F().size())];
  std::set<Vertex> keys;
  const auto k = rng.below(static_cast<std::uint64_t>(max_exceptions) + 1);
  for (std::uint64_t i = 0; i < k; ++i) keys.insert(ball[rng.below(ball.size())]);
  std::map<Vertex, Perm> exc;
  for (const auto& v : keys) {
    // Choose among the F' elements compatible with what propagates into v.
    std::vector<const Perm*> ok;
    if (v.empty()) {
      for (const auto& p : G.Fprime()) ok.push_back(&p);
    } else {
      const Vertex parent = v.substr(0, v.size() - 1);
      const int c = v.back() - '0';
      Cursor cur{"", base, exc.count("") ? exc.at("") : deflt};
      walk(*ctx, exc, cur, letters(parent));
      for (const auto& p : G.Fprime())
        if (p(c) == cur.sigma(c)) ok.push_back(&p);
    }
    exc[v] = *ok[rng.below(ok.size())];
  }
  return TreeAut::make(ctx, base, deflt, std::move(exc));
}

Json to_json(const TreeAut& g) {
  Json exc = Json::object();
  for (const auto& [v, p] : g.exceptions()) exc[v] = to_json(p);
  return Json{{"base_image", g.base_image()}, {"default", to_json(g.default_perm())}, {"exceptions", exc}};
}

TreeAut tree_aut_from_json(const std::shared_ptr<const GffContext>& ctx, const Json& j) {
  const int n = ctx->tree.degree;
  try {
    std::map<Vertex, Perm> exc;
    if (j.contains("exceptions"))
      for (const auto& [k, p] : j.at("exceptions").items()) exc[ctx->tree.parse(k)] = perm_from_json(p, n);
    return TreeAut::make(ctx, ctx->tree.parse(j.at("base_image").get<std::string>()),
                         perm_from_json(j.at("default"), n), std::move(exc));
  } catch (const Json::exception& e) {
    throw ParseError(std::string("tree automorphism JSON: ") + e.what());
  } catch (const PreconditionError& e) {
    throw ParseError(std::string("tree automorphism JSON: ") + e.what());
  }
}

}  // namespace germlab::trees
