#pragma once

#include <cstddef>
#include <vector>

namespace germlab::par {

/// Hop distances from each source over an adjacency list; -1 marks
/// unreachable vertices. One BFS per source, run in parallel.
std::vector<std::vector<int>> bfs_from_sources(const std::vector<std::vector<std::size_t>>& adjacency,
                                               const std::vector<std::size_t>& sources);
std::vector<std::vector<int>> bfs_from_sources_serial(const std::vector<std::vector<std::size_t>>& adjacency,
                                                      const std::vector<std::size_t>& sources);

}  // namespace germlab::par
