#include "mlcn/centrality.hpp"

#include <algorithm>

#include "mlcn/errors.hpp"

namespace mlcn {
namespace {

// Per-source Brandes state, reused across sources.
struct Sweep {
  explicit Sweep(std::size_t n) : dist(n), sigma(n), delta(n), preds(n) { order.reserve(n); }

  void run(const Graph& g, Vertex s) {
    std::fill(dist.begin(), dist.end(), -1);
    std::fill(sigma.begin(), sigma.end(), 0.0);
    std::fill(delta.begin(), delta.end(), 0.0);
    for (auto& p : preds) p.clear();
    order.clear();

    dist[s] = 0;
    sigma[s] = 1.0;
    order.push_back(s);
    for (std::size_t head = 0; head < order.size(); ++head) {
      const Vertex x = order[head];
      for (Vertex y : g.neighbors(x)) {
        if (dist[y] < 0) {
          dist[y] = dist[x] + 1;
          order.push_back(y);
        }
        if (dist[y] == dist[x] + 1) {
          sigma[y] += sigma[x];
          preds[y].push_back(x);
        }
      }
    }
  }

  std::vector<int> dist;
  std::vector<double> sigma;
  std::vector<double> delta;
  std::vector<std::vector<Vertex>> preds;
  std::vector<Vertex> order;  // BFS order, non-decreasing distance
};

}  // namespace

double CentralityMap::at(Vertex v) const {
  auto it = std::lower_bound(scores.begin(), scores.end(), v,
                             [](const NodeScore& s, Vertex id) { return s.id < id; });
  if (it == scores.end() || it->id != v) throw ArgumentError("vertex has no centrality score");
  return it->score;
}

double EdgeCentralityMap::at(Edge e) const {
  auto it = std::lower_bound(scores.begin(), scores.end(), e,
                             [](const EdgeScore& s, const Edge& id) { return s.id < id; });
  if (it == scores.end() || it->id != e) throw ArgumentError("edge has no centrality score");
  return it->score;
}

CentralityMap node_betweenness(const Graph& g) {
  const std::size_t n = g.vertex_count();
  std::vector<double> bc(n, 0.0);
  Sweep sweep(n);
  for (Vertex s : g.live_vertices()) {
    if (g.degree(s) == 0) continue;
    sweep.run(g, s);
    for (auto it = sweep.order.rbegin(); it != sweep.order.rend(); ++it) {
      const Vertex w = *it;
      for (Vertex v : sweep.preds[w]) {
        sweep.delta[v] += sweep.sigma[v] / sweep.sigma[w] * (1.0 + sweep.delta[w]);
      }
      if (w != s) bc[w] += sweep.delta[w];
    }
  }

  CentralityMap out;
  out.scores.reserve(g.live_count());
  // Each unordered pair was accumulated once from each endpoint.
  for (Vertex v : g.live_vertices()) out.scores.push_back({v, bc[v] / 2.0});
  return out;
}

EdgeCentralityMap edge_betweenness(const Graph& g) {
  const std::size_t n = g.vertex_count();
  const std::vector<Edge> edges = g.edges();
  std::vector<double> bc(edges.size(), 0.0);

  // slot[u][k] = index into `edges` of (u, neighbors(u)[k]).
  std::vector<std::vector<std::size_t>> slot(n);
  for (Vertex u = 0; u < n; ++u) {
    const auto nbrs = g.neighbors(u);
    slot[u].resize(nbrs.size());
    for (std::size_t k = 0; k < nbrs.size(); ++k) {
      const Edge e{u, nbrs[k]};
      slot[u][k] = static_cast<std::size_t>(
          std::lower_bound(edges.begin(), edges.end(), e) - edges.begin());
    }
  }
  auto edge_index = [&](Vertex a, Vertex b) {
    const auto nbrs = g.neighbors(a);
    const auto k = std::lower_bound(nbrs.begin(), nbrs.end(), b) - nbrs.begin();
    return slot[a][static_cast<std::size_t>(k)];
  };

  Sweep sweep(n);
  for (Vertex s : g.live_vertices()) {
    if (g.degree(s) == 0) continue;
    sweep.run(g, s);
    for (auto it = sweep.order.rbegin(); it != sweep.order.rend(); ++it) {
      const Vertex w = *it;
      for (Vertex v : sweep.preds[w]) {
        const double c = sweep.sigma[v] / sweep.sigma[w] * (1.0 + sweep.delta[w]);
        bc[edge_index(v, w)] += c;
        sweep.delta[v] += c;
      }
    }
  }

  EdgeCentralityMap out;
  out.scores.reserve(edges.size());
  for (std::size_t i = 0; i < edges.size(); ++i) out.scores.push_back({edges[i], bc[i] / 2.0});
  return out;
}

}  // namespace mlcn
