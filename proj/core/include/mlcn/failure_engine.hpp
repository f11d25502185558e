#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "mlcn/layered_network.hpp"

namespace mlcn {

// SEBC / DEBC fail L1 edges, SNBC / DNBC fail nodes. Static modes rank once
// on a fresh network and fail the top K as a batch; dynamic modes re-rank
// after every single failure.
enum class FailureMode { kSebc, kDebc, kSnbc, kDnbc };

const char* mode_name(FailureMode mode) noexcept;
std::optional<FailureMode> parse_mode(std::string_view text);
constexpr bool is_static(FailureMode m) { return m == FailureMode::kSebc || m == FailureMode::kSnbc; }
constexpr bool is_node_mode(FailureMode m) { return m == FailureMode::kSnbc || m == FailureMode::kDnbc; }

struct ScenarioConfig {
  MlcnConfig mlcn;
  FailureMode mode = FailureMode::kDebc;
  std::size_t failures = 60;
  std::uint64_t seed = 1;
  std::size_t replicates = 1;

  // Throws ArgumentError when a precondition of the scenario fails.
  void validate() const;

  friend bool operator==(const ScenarioConfig&, const ScenarioConfig&) = default;
};

struct LayerMetrics {
  std::optional<double> aspl;  // absent when the layer has no reachable pair
  std::uint64_t tspc = 0;
  std::size_t tne = 0;

  friend bool operator==(const LayerMetrics&, const LayerMetrics&) = default;
};

using NetworkMetrics = std::array<LayerMetrics, kLayerCount>;

NetworkMetrics measure(const LayeredNetwork& net);

struct MetricsRecord {
  std::size_t step = 0;  // failures applied so far (K in static modes)
  NetworkMetrics layers;
  // Static modes: metrics of this K's freshly built network before failure.
  std::optional<NetworkMetrics> baseline;
  std::vector<Edge> failed_edges;
  std::vector<Vertex> failed_nodes;

  friend bool operator==(const MetricsRecord&, const MetricsRecord&) = default;
};

struct MetricsSeries {
  FailureMode mode = FailureMode::kDebc;
  ScenarioConfig config;
  std::size_t replicate = 0;
  std::vector<MetricsRecord> records;
  // Dynamic modes: metrics of the network before the first failure.
  std::optional<NetworkMetrics> initial;
  bool truncated = false;
  std::string truncation_reason;

  friend bool operator==(const MetricsSeries&, const MetricsSeries&) = default;
};

// Seeds for the network built at `step` of `replicate`. Dynamic modes build
// once with step 1, so a static K=1 build and a dynamic build coincide.
LayerSeeds construction_seeds(std::uint64_t master, std::size_t replicate, std::size_t step);

// Single-network building blocks. Each applies its failures, propagates,
// and measures the result.

// Fails the top-k L1 edges by EBC computed once. Fails fewer if L1 has
// fewer than k edges.
MetricsRecord fail_top_edges(LayeredNetwork& net, std::size_t k);
// Fails the top-k live vertices by L1 NBC computed once.
MetricsRecord fail_top_nodes(LayeredNetwork& net, std::size_t k);
// Recomputes L1 EBC and fails the single top edge; nullopt if L1 is empty.
std::optional<MetricsRecord> fail_next_edge(LayeredNetwork& net, std::size_t step);
// Recomputes L1 NBC and fails the single top vertex; nullopt if fewer than
// two live vertices remain.
std::optional<MetricsRecord> fail_next_node(LayeredNetwork& net, std::size_t step);

// Called with each record and the network state it was measured on.
using StepObserver = std::function<void(const MetricsRecord&, const LayeredNetwork&)>;

MetricsSeries run_sebc(const ScenarioConfig& cfg, std::size_t replicate = 0,
                       const StepObserver& observer = {});
MetricsSeries run_debc(const ScenarioConfig& cfg, std::size_t replicate = 0,
                       const StepObserver& observer = {});
MetricsSeries run_snbc(const ScenarioConfig& cfg, std::size_t replicate = 0,
                       const StepObserver& observer = {});
MetricsSeries run_dnbc(const ScenarioConfig& cfg, std::size_t replicate = 0,
                       const StepObserver& observer = {});

// Dispatches on cfg.mode.
MetricsSeries run_scenario(const ScenarioConfig& cfg, std::size_t replicate,
                           const StepObserver& observer = {});

// All cfg.replicates runs, ordered by replicate id. `workers` > 1 runs
// replicates concurrently; output is identical for any worker count.
std::vector<MetricsSeries> run_replicates(const ScenarioConfig& cfg, std::size_t workers = 1);

}  // namespace mlcn
