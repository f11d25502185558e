#include "mlcn/reference.hpp"

#include <algorithm>

namespace mlcn::reference {
namespace {

void extend(const Graph& g, Vertex target, std::vector<Vertex>& path, std::vector<bool>& on_path,
            std::vector<std::vector<Vertex>>& found) {
  const Vertex tip = path.back();
  if (tip == target) {
    found.push_back(path);
    return;
  }
  for (Vertex next : g.neighbors(tip)) {
    if (on_path[next]) continue;
    on_path[next] = true;
    path.push_back(next);
    extend(g, target, path, on_path, found);
    path.pop_back();
    on_path[next] = false;
  }
}

}  // namespace

std::vector<PairGeodesics> all_geodesics(const Graph& g) {
  std::vector<PairGeodesics> out;
  const auto live = g.live_vertices();
  for (std::size_t i = 0; i < live.size(); ++i) {
    for (std::size_t j = i + 1; j < live.size(); ++j) {
      std::vector<std::vector<Vertex>> simple;
      std::vector<Vertex> path{live[i]};
      std::vector<bool> on_path(g.vertex_count(), false);
      on_path[live[i]] = true;
      extend(g, live[j], path, on_path, simple);
      if (simple.empty()) continue;

      std::size_t shortest = simple.front().size();
      for (const auto& p : simple) shortest = std::min(shortest, p.size());
      PairGeodesics pg{live[i], live[j], shortest - 1, {}};
      for (auto& p : simple) {
        if (p.size() == shortest) pg.paths.push_back(std::move(p));
      }
      out.push_back(std::move(pg));
    }
  }
  return out;
}

Metrics brute_force(const Graph& g) {
  Metrics m;
  m.node_betweenness.assign(g.vertex_count(), 0.0);
  for (const Edge& e : g.edges()) m.edge_betweenness[e] = 0.0;

  for (const PairGeodesics& pg : all_geodesics(g)) {
    ++m.reachable_pairs;
    m.distance_sum += pg.length;
    m.tspc += pg.paths.size();
    ++m.histogram[static_cast<std::uint32_t>(pg.length)];

    const double total = static_cast<double>(pg.paths.size());
    std::vector<std::size_t> through_node(g.vertex_count(), 0);
    std::map<Edge, std::size_t> through_edge;
    for (const auto& p : pg.paths) {
      for (std::size_t k = 1; k + 1 < p.size(); ++k) ++through_node[p[k]];
      for (std::size_t k = 0; k + 1 < p.size(); ++k) ++through_edge[Edge{p[k], p[k + 1]}];
    }
    for (Vertex v = 0; v < g.vertex_count(); ++v) {
      m.node_betweenness[v] += static_cast<double>(through_node[v]) / total;
    }
    for (const auto& [e, count] : through_edge) {
      m.edge_betweenness[e] += static_cast<double>(count) / total;
    }
  }
  return m;
}

bool reachable(const Graph& g, Vertex a, Vertex b) {
  std::vector<bool> seen(g.vertex_count(), false);
  std::vector<Vertex> stack{a};
  seen[a] = true;
  while (!stack.empty()) {
    const Vertex x = stack.back();
    stack.pop_back();
    if (x == b) return true;
    for (Vertex y : g.neighbors(x)) {
      if (!seen[y]) {
        seen[y] = true;
        stack.push_back(y);
      }
    }
  }
  return false;
}

void prune_to_fixpoint(std::vector<Graph>& layers) {
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t k = 1; k < layers.size(); ++k) {
      for (const Edge& e : layers[k].edges()) {
        if (!reachable(layers[k - 1], e.u, e.v)) {
          layers[k].remove_edge(e);
          changed = true;
        }
      }
    }
  }
}

}  // namespace mlcn::reference
