#include "germlab/fullgroup/schreier.hpp"

#include "germlab/error.hpp"
#include "germlab/par/patch_bfs.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace germlab::fullgroup {

int cayley_step(const Clopen& U) { return std::max<int>(1, static_cast<int>(return_set(U).size()) - 1); }

std::int64_t SchreierPatch::ambient(std::size_t i, std::size_t j) const {
  const std::int64_t diff = std::abs(vertices[i] - vertices[j]);
  return (diff + step - 1) / step;
}

SchreierPatch schreier_patch(const Clopen& U, int step, const EventuallyPeriodic& x, int radius) {
  if (step < 1) throw PreconditionError("step must be at least 1");
  if (radius < 0) throw PreconditionError("radius must be non-negative");
  if (!contains(U, x)) throw PreconditionError("x = " + x.str() + " is not in U = " + to_string(U));
  SchreierPatch p;
  p.U = U;
  p.x = x;
  p.step = step;
  p.radius = radius;
  for (std::int64_t n = -radius; n <= radius; ++n)
    if (contains(U, odometer_step(x, n))) p.vertices.push_back(n);
  p.adjacency.resize(p.vertices.size());
  for (std::size_t i = 0; i < p.vertices.size(); ++i)
    for (std::size_t j = i + 1; j < p.vertices.size() && p.vertices[j] - p.vertices[i] <= 3 * step; ++j) {
      p.edges.push_back({i, j});
      p.adjacency[i].push_back(j);
      p.adjacency[j].push_back(i);
    }
  return p;
}

std::vector<std::pair<std::size_t, std::size_t>> orbital_schreier_edges(const SchreierPatch& p) {
  std::map<std::int64_t, std::size_t> index;
  for (std::size_t i = 0; i < p.vertices.size(); ++i) index[p.vertices[i]] = i;
  const auto gens = restricted_generators(p.U, p.step);
  std::set<std::pair<std::size_t, std::size_t>> edges;
  for (std::size_t i = 0; i < p.vertices.size(); ++i) {
    const auto y = odometer_step(p.x, p.vertices[i]);
    for (const auto& g : gens) {
      const std::int64_t m = p.vertices[i] + g.shift_at(y);
      auto it = index.find(m);
      if (m == p.vertices[i] || it == index.end()) continue;
      edges.insert({std::min(i, it->second), std::max(i, it->second)});
    }
  }
  return {edges.begin(), edges.end()};
}

QIReport quasi_isometry_check(const SchreierPatch& p, int margin) {
  QIReport r;
  r.margin = margin < 0 ? 3 * p.radius / 4 : margin;
  const std::int64_t inner = p.radius - r.margin;
  std::vector<std::size_t> interior;
  for (std::size_t i = 0; i < p.vertices.size(); ++i)
    if (std::abs(p.vertices[i]) <= inner) interior.push_back(i);
  r.interior = interior.size();

  const auto dist = par::bfs_from_sources(p.adjacency, interior);
  bool first = true;
  for (std::size_t a = 0; a < interior.size(); ++a)
    for (std::size_t b = a + 1; b < interior.size(); ++b) {
      ++r.pairs;
      const auto i = interior[a], j = interior[b];
      const std::int64_t d = p.ambient(i, j);
      const int delta = dist[a][j];
      if (delta < 0) {
        r.violations.push_back({p.vertices[i], p.vertices[j], d, std::nullopt});
        continue;
      }
      if (!(delta <= d && d <= 3 * static_cast<std::int64_t>(delta)))
        r.violations.push_back({p.vertices[i], p.vertices[j], d, delta});
      const Rational ratio(d, delta);
      if (first || ratio > r.max_ratio) r.max_ratio = ratio;
      if (first || ratio < r.min_ratio) r.min_ratio = ratio;
      first = false;
    }

  r.one_dense = true;
  for (std::int64_t n = -(p.radius - p.step); n <= p.radius - p.step; ++n) {
    auto it = std::lower_bound(p.vertices.begin(), p.vertices.end(), n - p.step);
    if (it == p.vertices.end() || *it > n + p.step) {
      r.one_dense = false;
      break;
    }
  }
  return r;
}

Json to_json(const QIReport& r) {
  Json v = Json::array();
  for (const auto& x : r.violations)
    v.push_back(Json{{"y", x.y}, {"z", x.z}, {"d", x.d}, {"delta", x.delta ? Json(*x.delta) : Json(nullptr)}});
  return Json{{"interior", r.interior},   {"pairs", r.pairs},
              {"margin", r.margin},       {"one_dense", r.one_dense},
              {"max_ratio", germlab::to_string(r.max_ratio)}, {"min_ratio", germlab::to_string(r.min_ratio)},
              {"violations", v}};
}

void write_dot(std::ostream& out, const SchreierPatch& p) {
  out << "graph delta_x {\n";
  out << "  // U = " << to_string(p.U) << ", x = " << p.x.str() << ", step " << p.step << ", radius " << p.radius
      << "\n";
  for (auto n : p.vertices) out << "  \"" << n << "\";\n";
  for (const auto& [i, j] : p.edges) out << "  \"" << p.vertices[i] << "\" -- \"" << p.vertices[j] << "\";\n";
  out << "}\n";
}

}  // namespace germlab::fullgroup
