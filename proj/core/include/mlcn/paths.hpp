#pragma once

#include <cstdint>
#include <limits>
#include <map>
#include <optional>
#include <vector>

#include "mlcn/graph.hpp"

namespace mlcn {

inline constexpr std::uint32_t kUnreachable = std::numeric_limits<std::uint32_t>::max();

// Single-source hop distances and shortest-path counts.
struct SsspResult {
  Vertex source = 0;
  std::vector<std::uint32_t> dist;   // kUnreachable when not reachable
  std::vector<std::uint64_t> sigma;  // 0 when not reachable
};

// Throws ArgumentError if s is out of range or dead. Throws
// std::overflow_error if a path count does not fit in 64 bits.
SsspResult bfs_count(const Graph& g, Vertex s);

// Number of unordered reachable vertex pairs at each hop distance >= 1.
struct HopHistogram {
  std::map<std::uint32_t, std::uint64_t> counts;

  std::uint64_t total() const;
  std::uint32_t max_hop() const;
  // Most populated hop distance; ties go to the shorter distance.
  std::uint32_t modal_hop() const;
  // Sample skewness (third standardized moment) of the hop distribution.
  // Zero for a degenerate single-valued distribution.
  double skewness() const;

  friend bool operator==(const HopHistogram&, const HopHistogram&) = default;
};

// Everything the per-layer metrics need, from one sweep of BFS over all
// live sources. Pairs are unordered and restricted to reachable pairs.
struct PathSummary {
  std::uint64_t reachable_pairs = 0;
  std::uint64_t distance_sum = 0;
  std::uint64_t shortest_path_count = 0;
  HopHistogram histogram;

  // Absent when there is no reachable pair.
  std::optional<double> aspl() const;
};

PathSummary summarize_paths(const Graph& g);

// Mean hop distance over reachable unordered pairs. Throws
// UndefinedMetricError if no pair is reachable.
double aspl(const Graph& g);

// Sum over reachable unordered pairs of the number of geodesics.
std::uint64_t tspc(const Graph& g);

inline std::size_t tne(const Graph& g) { return g.edge_count(); }

HopHistogram hop_histogram(const Graph& g);

}  // namespace mlcn
