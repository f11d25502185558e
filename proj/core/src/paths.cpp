#include "mlcn/paths.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "mlcn/errors.hpp"

namespace mlcn {

SsspResult bfs_count(const Graph& g, Vertex s) {
  if (!g.is_live(s)) throw ArgumentError("BFS source " + std::to_string(s) + " is not a live vertex");

  const std::size_t n = g.vertex_count();
  SsspResult r{s, std::vector<std::uint32_t>(n, kUnreachable), std::vector<std::uint64_t>(n, 0)};
  r.dist[s] = 0;
  r.sigma[s] = 1;

  std::vector<Vertex> queue;
  queue.reserve(n);
  queue.push_back(s);
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const Vertex x = queue[head];
    for (Vertex y : g.neighbors(x)) {
      if (r.dist[y] == kUnreachable) {
        r.dist[y] = r.dist[x] + 1;
        queue.push_back(y);
      }
      if (r.dist[y] == r.dist[x] + 1) {
        if (__builtin_add_overflow(r.sigma[y], r.sigma[x], &r.sigma[y])) {
          throw std::overflow_error("shortest-path count exceeds 64 bits");
        }
      }
    }
  }
  return r;
}

std::uint64_t HopHistogram::total() const {
  std::uint64_t t = 0;
  for (const auto& [hop, count] : counts) t += count;
  return t;
}

std::uint32_t HopHistogram::max_hop() const {
  return counts.empty() ? 0 : counts.rbegin()->first;
}

std::uint32_t HopHistogram::modal_hop() const {
  std::uint32_t best = 0;
  std::uint64_t best_count = 0;
  for (const auto& [hop, count] : counts) {
    if (count > best_count) {
      best = hop;
      best_count = count;
    }
  }
  return best;
}

double HopHistogram::skewness() const {
  const double n = static_cast<double>(total());
  if (n == 0) return 0.0;
  double mean = 0;
  for (const auto& [hop, count] : counts) mean += hop * static_cast<double>(count);
  mean /= n;
  double m2 = 0, m3 = 0;
  for (const auto& [hop, count] : counts) {
    const double d = hop - mean;
    m2 += d * d * static_cast<double>(count);
    m3 += d * d * d * static_cast<double>(count);
  }
  m2 /= n;
  m3 /= n;
  if (m2 <= 0) return 0.0;
  return m3 / std::pow(m2, 1.5);
}

std::optional<double> PathSummary::aspl() const {
  if (reachable_pairs == 0) return std::nullopt;
  return static_cast<double>(distance_sum) / static_cast<double>(reachable_pairs);
}

PathSummary summarize_paths(const Graph& g) {
  PathSummary out;
  for (Vertex s : g.live_vertices()) {
    if (g.degree(s) == 0) continue;
    const SsspResult r = bfs_count(g, s);
    for (Vertex t = s + 1; t < g.vertex_count(); ++t) {
      if (r.dist[t] == kUnreachable) continue;
      ++out.reachable_pairs;
      out.distance_sum += r.dist[t];
      if (__builtin_add_overflow(out.shortest_path_count, r.sigma[t], &out.shortest_path_count)) {
        throw std::overflow_error("total shortest-path count exceeds 64 bits");
      }
      ++out.histogram.counts[r.dist[t]];
    }
  }
  return out;
}

double aspl(const Graph& g) {
  const auto value = summarize_paths(g).aspl();
  if (!value) throw UndefinedMetricError("ASPL undefined: graph has no reachable vertex pair");
  return *value;
}

std::uint64_t tspc(const Graph& g) { return summarize_paths(g).shortest_path_count; }

HopHistogram hop_histogram(const Graph& g) { return summarize_paths(g).histogram; }

}  // namespace mlcn
