#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "mlcn/graph.hpp"

// Exhaustive reference computations for small graphs. Every geodesic is
// found by enumerating all simple paths between each pair, so nothing here
// shares code with the BFS or Brandes routines it is used to check.
// Cost is exponential; keep n at or below about 10.
namespace mlcn::reference {

struct PairGeodesics {
  Vertex x = 0;
  Vertex y = 0;
  std::size_t length = 0;
  std::vector<std::vector<Vertex>> paths;
};

// Shortest paths for every reachable unordered pair of live vertices, x < y.
std::vector<PairGeodesics> all_geodesics(const Graph& g);

struct Metrics {
  std::uint64_t reachable_pairs = 0;
  std::uint64_t distance_sum = 0;
  std::uint64_t tspc = 0;
  std::map<std::uint32_t, std::uint64_t> histogram;
  std::vector<double> node_betweenness;     // indexed by vertex id
  std::map<Edge, double> edge_betweenness;  // every edge of g
};

Metrics brute_force(const Graph& g);

// Whether a path joins a and b, by plain depth-first search.
bool reachable(const Graph& g, Vertex a, Vertex b);

// Repeatedly deletes any edge of layers[k] (k >= 1) whose endpoints are not
// reachable in layers[k - 1], sweeping all layers until nothing changes.
void prune_to_fixpoint(std::vector<Graph>& layers);

}  // namespace mlcn::reference
