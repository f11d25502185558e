#include "mlcn/generators.hpp"

#include <algorithm>
#include <string>
#include <vector>

#include "mlcn/errors.hpp"

namespace mlcn {

Graph gen_er(std::size_t n, std::span<const Vertex> vertices, double p, Rng& rng) {
  if (!(p >= 0.0 && p <= 1.0)) throw ArgumentError("edge probability must lie in [0, 1]");
  Graph g(n);
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    for (std::size_t j = i + 1; j < vertices.size(); ++j) {
      if (rng.bernoulli(p)) g.add_edge(vertices[i], vertices[j]);
    }
  }
  return g;
}

Graph gen_er_min_degree(std::size_t n, double p, Rng& rng, std::size_t max_attempts) {
  if (n < 2) throw ArgumentError("ER generation needs at least 2 vertices");
  if (!(p > 0.0 && p <= 1.0)) throw ArgumentError("edge probability must lie in (0, 1]");

  std::vector<Vertex> all(n);
  for (std::size_t v = 0; v < n; ++v) all[v] = static_cast<Vertex>(v);

  for (std::size_t attempt = 0; attempt < max_attempts; ++attempt) {
    Graph g = gen_er(n, all, p, rng);
    const bool isolated = std::any_of(all.begin(), all.end(),
                                      [&](Vertex v) { return g.degree(v) == 0; });
    if (!isolated) return g;
  }
  throw GenerationError("ER(" + std::to_string(n) + ", " + std::to_string(p) +
                        "): every one of " + std::to_string(max_attempts) +
                        " draws had an isolated vertex");
}

Graph gen_scale_free(std::size_t n, std::size_t m, Rng& rng) {
  if (n < 2) throw ArgumentError("scale-free generation needs at least 2 vertices");
  if (m < 1 || m >= n) throw ArgumentError("attachment count m must satisfy 1 <= m < n");

  Graph g(n);
  // Each vertex appears once per unit of degree.
  std::vector<Vertex> endpoints;
  endpoints.reserve(2 * scale_free_edge_count(n, m));

  for (Vertex a = 0; a <= m; ++a) {
    for (Vertex b = a + 1; b <= m; ++b) {
      g.add_edge(a, b);
      endpoints.push_back(a);
      endpoints.push_back(b);
    }
  }

  std::vector<Vertex> targets;
  for (Vertex v = static_cast<Vertex>(m + 1); v < n; ++v) {
    targets.clear();
    while (targets.size() < m) {
      const Vertex t = endpoints[rng.below(endpoints.size())];
      if (std::find(targets.begin(), targets.end(), t) == targets.end()) targets.push_back(t);
    }
    for (Vertex t : targets) {
      g.add_edge(v, t);
      endpoints.push_back(v);
      endpoints.push_back(t);
    }
  }
  return g;
}

}  // namespace mlcn
