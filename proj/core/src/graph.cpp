#include "mlcn/graph.hpp"

#include <algorithm>
#include <string>

#include "mlcn/errors.hpp"

namespace mlcn {

Graph::Graph(std::size_t n) : adjacency_(n), alive_(n, true), live_count_(n) {}

bool Graph::has_edge(Edge e) const {
  if (!contains(e.u) || !contains(e.v)) return false;
  const auto& adj = adjacency_[e.u];
  return std::binary_search(adj.begin(), adj.end(), e.v);
}

bool Graph::add_edge(Vertex a, Vertex b) {
  if (a == b) throw ArgumentError("self-loop on vertex " + std::to_string(a));
  if (!contains(a) || !contains(b)) {
    throw ArgumentError("edge endpoint out of range");
  }
  if (!alive_[a] || !alive_[b]) throw ArgumentError("edge endpoint is dead");

  auto& adj_a = adjacency_[a];
  auto it = std::lower_bound(adj_a.begin(), adj_a.end(), b);
  if (it != adj_a.end() && *it == b) return false;
  adj_a.insert(it, b);
  auto& adj_b = adjacency_[b];
  adj_b.insert(std::lower_bound(adj_b.begin(), adj_b.end(), a), a);
  ++edge_count_;
  return true;
}

bool Graph::remove_edge(Edge e) {
  if (!has_edge(e)) return false;
  auto& adj_u = adjacency_[e.u];
  adj_u.erase(std::lower_bound(adj_u.begin(), adj_u.end(), e.v));
  auto& adj_v = adjacency_[e.v];
  adj_v.erase(std::lower_bound(adj_v.begin(), adj_v.end(), e.u));
  --edge_count_;
  return true;
}

std::size_t Graph::kill(Vertex v) {
  if (!contains(v)) throw ArgumentError("vertex " + std::to_string(v) + " out of range");
  if (!alive_[v]) throw ArgumentError("vertex " + std::to_string(v) + " already dead");

  const std::vector<Vertex> incident = adjacency_[v];
  for (Vertex w : incident) remove_edge(Edge{v, w});
  alive_[v] = false;
  --live_count_;
  return incident.size();
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(edge_count_);
  for (Vertex u = 0; u < adjacency_.size(); ++u) {
    for (Vertex w : adjacency_[u]) {
      if (u < w) out.emplace_back(u, w);
    }
  }
  return out;
}

std::vector<Vertex> Graph::live_vertices() const {
  std::vector<Vertex> out;
  out.reserve(live_count_);
  for (Vertex v = 0; v < alive_.size(); ++v) {
    if (alive_[v]) out.push_back(v);
  }
  return out;
}

std::vector<Vertex> component_labels(const Graph& g) {
  const std::size_t n = g.vertex_count();
  constexpr Vertex kUnset = ~Vertex{0};
  std::vector<Vertex> label(n, kUnset);
  std::vector<Vertex> stack;
  for (Vertex root = 0; root < n; ++root) {
    if (label[root] != kUnset) continue;
    label[root] = root;
    stack.push_back(root);
    while (!stack.empty()) {
      const Vertex x = stack.back();
      stack.pop_back();
      for (Vertex y : g.neighbors(x)) {
        if (label[y] == kUnset) {
          label[y] = root;
          stack.push_back(y);
        }
      }
    }
  }
  return label;
}

bool is_connected(const Graph& g) {
  const auto live = g.live_vertices();
  if (live.empty()) return true;
  const auto label = component_labels(g);
  const Vertex first = label[live.front()];
  return std::all_of(live.begin(), live.end(), [&](Vertex v) { return label[v] == first; });
}

}  // namespace mlcn
