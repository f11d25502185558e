#pragma once

#include <algorithm>
#include <cstddef>
#include <vector>

#include "mlcn/graph.hpp"

namespace mlcn {

struct NodeScore {
  Vertex id = 0;
  double score = 0.0;
  friend bool operator==(const NodeScore&, const NodeScore&) = default;
};

struct EdgeScore {
  Edge id;
  double score = 0.0;
  friend bool operator==(const EdgeScore&, const EdgeScore&) = default;
};

// Unnormalized betweenness per live vertex, ascending by id.
struct CentralityMap {
  std::vector<NodeScore> scores;
  double at(Vertex v) const;
};

// Unnormalized betweenness per edge, ascending by edge.
struct EdgeCentralityMap {
  std::vector<EdgeScore> scores;
  double at(Edge e) const;
};

// Sum over unordered pairs {x, y} (x, y != v) of the fraction of x-y
// geodesics passing through v. Brandes accumulation over all live sources.
CentralityMap node_betweenness(const Graph& g);

// Sum over unordered reachable pairs of the fraction of geodesics traversing
// each edge. An edge's own endpoint pair contributes 1.
EdgeCentralityMap edge_betweenness(const Graph& g);

// Ids of the k highest scores: descending by score, ties by ascending id.
template <typename Map>
auto top_ranked(const Map& map, std::size_t k) {
  auto entries = map.scores;
  const std::size_t take = std::min(k, entries.size());
  std::partial_sort(entries.begin(), entries.begin() + static_cast<std::ptrdiff_t>(take),
                    entries.end(), [](const auto& a, const auto& b) {
                      if (a.score != b.score) return a.score > b.score;
                      return a.id < b.id;
                    });
  std::vector<decltype(entries.front().id)> ids;
  ids.reserve(take);
  for (std::size_t i = 0; i < take; ++i) ids.push_back(entries[i].id);
  return ids;
}

}  // namespace mlcn
