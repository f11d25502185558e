#pragma once

#include <cstddef>
#include <span>

#include "mlcn/graph.hpp"
#include "mlcn/random.hpp"

namespace mlcn {

inline constexpr std::size_t kDefaultErAttempts = 10000;

// G(n, p): every pair of vertices in `vertices` joined independently with
// probability p. The graph has `n` ids; vertices not listed stay isolated.
Graph gen_er(std::size_t n, std::span<const Vertex> vertices, double p, Rng& rng);

// G(n, p) conditioned on minimum degree >= 1, by whole-graph rejection.
// Throws ArgumentError for n < 2 or p outside (0, 1], GenerationError when
// `max_attempts` draws all contain an isolated vertex.
Graph gen_er_min_degree(std::size_t n, double p, Rng& rng,
                        std::size_t max_attempts = kDefaultErAttempts);

// Barabasi-Albert preferential attachment: a clique on m+1 seed vertices,
// then each further vertex attaches to m distinct existing vertices chosen
// with probability proportional to degree.
Graph gen_scale_free(std::size_t n, std::size_t m, Rng& rng);

// Edge count produced by gen_scale_free(n, m): m(m+1)/2 + (n-m-1)m.
constexpr std::size_t scale_free_edge_count(std::size_t n, std::size_t m) {
  return m * (m + 1) / 2 + (n - m - 1) * m;
}

}  // namespace mlcn
