#include "germlab/par/patch_bfs.hpp"

#include <deque>

namespace germlab::par {

namespace {

std::vector<int> bfs(const std::vector<std::vector<std::size_t>>& adj, std::size_t s) {
  std::vector<int> d(adj.size(), -1);
  std::deque<std::size_t> q{s};
  d[s] = 0;
  while (!q.empty()) {
    const auto u = q.front();
    q.pop_front();
    for (auto v : adj[u])
      if (d[v] < 0) {
        d[v] = d[u] + 1;
        q.push_back(v);
      }
  }
  return d;
}

}  // namespace

std::vector<std::vector<int>> bfs_from_sources(const std::vector<std::vector<std::size_t>>& adjacency,
                                               const std::vector<std::size_t>& sources) {
  std::vector<std::vector<int>> out(sources.size());
  const auto n = static_cast<long long>(sources.size());
#pragma omp parallel for schedule(dynamic, 4)
  for (long long i = 0; i < n; ++i) out[static_cast<std::size_t>(i)] = bfs(adjacency, sources[static_cast<std::size_t>(i)]);
  return out;
}

std::vector<std::vector<int>> bfs_from_sources_serial(const std::vector<std::vector<std::size_t>>& adjacency,
                                                      const std::vector<std::size_t>& sources) {
  std::vector<std::vector<int>> out;
  for (auto s : sources) out.push_back(bfs(adjacency, s));
  return out;
}

}  // namespace germlab::par
