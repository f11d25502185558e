#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <string>

#include "mlcn/graph.hpp"
#include "mlcn/random.hpp"

namespace mlcn {

enum class Layer : std::size_t { kL1 = 0, kL2 = 1, kL3 = 2 };
inline constexpr std::array<Layer, 3> kAllLayers{Layer::kL1, Layer::kL2, Layer::kL3};
inline constexpr std::size_t kLayerCount = 3;

const char* layer_name(Layer layer) noexcept;

// Generation parameters for the three layers.
//
// Defaults are calibrated so that at n = 100 the expected edge counts are
// ordered L1 (~200) < L2 (~740) < L3 (~2175) with wide margins.
struct MlcnConfig {
  std::size_t nodes = 100;
  double l1_p = 0.04;
  double l2_p = 0.15;
  std::size_t l3_m = 25;
  double gauss_max_skew = 0.5;
  std::size_t gauss_attempts = 1000;

  // Throws ArgumentError on out-of-range values.
  void validate() const;
  // Whether expected edge counts satisfy E[L1] < E[L2] < E[L3].
  bool expected_ordering_holds() const;

  friend bool operator==(const MlcnConfig&, const MlcnConfig&) = default;
};

// Outcome of the Gaussian-likeness check on an L1 candidate's hop-count
// histogram: connected, |skewness| bounded, and the modal hop strictly
// between 1 and the largest hop.
struct GaussianGate {
  bool connected = false;
  bool skew_ok = false;
  bool interior_mode = false;
  double skewness = 0.0;
  std::uint32_t modal_hop = 0;
  std::uint32_t max_hop = 0;

  bool passed() const { return connected && skew_ok && interior_mode; }
  // Comma-separated names of the failing gates; empty when passed.
  std::string failures() const;
};

GaussianGate evaluate_gaussian_gate(const Graph& g, double max_skew);

// Connected ER graph with min degree >= 1 passing the Gaussian gate;
// resamples up to cfg.gauss_attempts times, then throws GenerationError
// naming the gate that failed.
Graph build_l1(const MlcnConfig& cfg, Rng& rng);

// ER(n, l2_p) over the live vertices of l1, pruned to pairs connected in l1.
Graph build_l2(const MlcnConfig& cfg, const Graph& l1, Rng& rng);

// Scale-free graph with attachment l3_m, restricted to l2's live vertices and
// pruned to pairs connected in l2.
Graph build_l3(const MlcnConfig& cfg, const Graph& l2, Rng& rng);

// Removes every edge of `upper` whose endpoints lie in different components
// of `lower`. Returns the number of edges removed.
std::size_t prune_disconnected(Graph& upper, const Graph& lower);

struct LayerSeeds {
  std::uint64_t l1 = 0;
  std::uint64_t l2 = 0;
  std::uint64_t l3 = 0;
};

// Three graphs over one vertex set. Every L2 edge joins vertices connected in
// L1 and every L3 edge joins vertices connected in L2; each public mutation
// re-establishes this before returning. Vertex liveness is shared.
class LayeredNetwork {
 public:
  // Throws ArgumentError if vertex counts or liveness disagree. The layers
  // are taken as given; call propagate_failures() to enforce dependency.
  LayeredNetwork(Graph l1, Graph l2, Graph l3);

  static LayeredNetwork build(const MlcnConfig& cfg, const LayerSeeds& seeds);

  const Graph& layer(Layer which) const { return layers_[static_cast<std::size_t>(which)]; }
  const Graph& l1() const { return layers_[0]; }
  const Graph& l2() const { return layers_[1]; }
  const Graph& l3() const { return layers_[2]; }

  std::size_t vertex_count() const { return layers_[0].vertex_count(); }
  bool is_live(Vertex v) const { return layers_[0].is_live(v); }

  // Fails one L1 edge, then propagates. Throws ArgumentError if e is not an
  // L1 edge.
  void remove_l1_edge(Edge e);

  // Kills v in every layer (dropping its incident edges), then propagates.
  // Returns the number of incident edges dropped per layer, before
  // propagation. Throws ArgumentError if v is out of range or dead.
  std::array<std::size_t, kLayerCount> remove_node(Vertex v);

  // Kills v without propagating; for batch removals.
  std::array<std::size_t, kLayerCount> remove_node_deferred(Vertex v);
  void remove_l1_edge_deferred(Edge e);

  // One bottom-up pass: prune L2 against L1, then L3 against pruned L2.
  // Returns the number of edges pruned from {L2, L3}.
  std::array<std::size_t, 2> propagate_failures();

  // Replaces L2 and L3 with fresh draws over the live vertices, pruned
  // against the current lower layers.
  void regenerate_upper(const MlcnConfig& cfg, Rng& l2_rng, Rng& l3_rng);

  // Full reachability check of the dependency invariant.
  bool dependency_holds() const;

  friend bool operator==(const LayeredNetwork&, const LayeredNetwork&) = default;

 private:
  std::array<Graph, kLayerCount> layers_;
};

}  // namespace mlcn
