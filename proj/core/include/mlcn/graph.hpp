#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace mlcn {

using Vertex = std::uint32_t;

// Unordered vertex pair, stored canonically with u < v.
struct Edge {
  Vertex u = 0;
  Vertex v = 0;

  Edge() = default;
  Edge(Vertex a, Vertex b) : u(a < b ? a : b), v(a < b ? b : a) {}

  friend auto operator<=>(const Edge&, const Edge&) = default;
  friend bool operator==(const Edge&, const Edge&) = default;
};

// Undirected simple graph over dense vertex ids 0..n-1.
//
// Vertices are never renumbered. Killing a vertex strips its incident edges
// and marks it dead; it then behaves as an isolated vertex that no query
// considers live.
class Graph {
 public:
  Graph() = default;
  explicit Graph(std::size_t n);

  std::size_t vertex_count() const noexcept { return adjacency_.size(); }
  std::size_t live_count() const noexcept { return live_count_; }
  std::size_t edge_count() const noexcept { return edge_count_; }

  bool contains(Vertex v) const noexcept { return v < adjacency_.size(); }
  bool is_live(Vertex v) const noexcept { return contains(v) && alive_[v]; }

  // Sorted ascending.
  std::span<const Vertex> neighbors(Vertex v) const { return adjacency_.at(v); }
  std::size_t degree(Vertex v) const { return adjacency_.at(v).size(); }

  bool has_edge(Edge e) const;
  bool has_edge(Vertex a, Vertex b) const { return has_edge(Edge{a, b}); }

  // Returns false if the edge was already present. Throws ArgumentError on
  // self-loops, out-of-range ids, or dead endpoints.
  bool add_edge(Vertex a, Vertex b);
  // Returns false if the edge was absent.
  bool remove_edge(Edge e);

  // Removes every incident edge and marks v dead; returns the number of
  // edges removed. Throws ArgumentError if v is out of range or already dead.
  std::size_t kill(Vertex v);

  // All edges in ascending lexicographic order.
  std::vector<Edge> edges() const;
  std::vector<Vertex> live_vertices() const;

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  std::vector<std::vector<Vertex>> adjacency_;
  std::vector<bool> alive_;
  std::size_t live_count_ = 0;
  std::size_t edge_count_ = 0;
};

// Component label per vertex (dead vertices get their own singleton label).
// Labels are the smallest vertex id in each component.
std::vector<Vertex> component_labels(const Graph& g);

bool is_connected(const Graph& g);

}  // namespace mlcn
