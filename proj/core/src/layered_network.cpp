#include "mlcn/layered_network.hpp"

#include <cmath>
#include <string>

#include "mlcn/errors.hpp"
#include "mlcn/generators.hpp"
#include "mlcn/paths.hpp"

namespace mlcn {
namespace {

void kill_dead_like(Graph& g, const Graph& reference) {
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    if (g.is_live(v) && !reference.is_live(v)) g.kill(v);
  }
}

bool in_unit_interval(double p) { return p > 0.0 && p <= 1.0; }

}  // namespace

const char* layer_name(Layer layer) noexcept {
  switch (layer) {
    case Layer::kL1: return "L1";
    case Layer::kL2: return "L2";
    case Layer::kL3: return "L3";
  }
  return "?";
}

void MlcnConfig::validate() const {
  if (nodes < 2) throw ArgumentError("nodes must be >= 2");
  if (!in_unit_interval(l1_p)) throw ArgumentError("l1_p must lie in (0, 1]");
  if (!in_unit_interval(l2_p)) throw ArgumentError("l2_p must lie in (0, 1]");
  if (l3_m < 1 || l3_m >= nodes) throw ArgumentError("l3_m must satisfy 1 <= l3_m < nodes");
  if (!(gauss_max_skew >= 0.0) || !std::isfinite(gauss_max_skew)) {
    throw ArgumentError("gauss_max_skew must be a finite value >= 0");
  }
  if (gauss_attempts < 1) throw ArgumentError("gauss_attempts must be >= 1");
}

bool MlcnConfig::expected_ordering_holds() const {
  const double pairs = static_cast<double>(nodes) * static_cast<double>(nodes - 1) / 2.0;
  const double e1 = l1_p * pairs;
  const double e2 = l2_p * pairs;
  const double e3 = static_cast<double>(scale_free_edge_count(nodes, l3_m));
  return e1 < e2 && e2 < e3;
}

std::string GaussianGate::failures() const {
  std::string out;
  auto add = [&](bool ok, const char* name) {
    if (ok) return;
    if (!out.empty()) out += ", ";
    out += name;
  };
  add(connected, "connectivity");
  add(skew_ok, "skewness");
  add(interior_mode, "interior-mode");
  return out;
}

GaussianGate evaluate_gaussian_gate(const Graph& g, double max_skew) {
  GaussianGate gate;
  gate.connected = is_connected(g);
  const HopHistogram h = hop_histogram(g);
  gate.skewness = h.skewness();
  gate.skew_ok = std::abs(gate.skewness) <= max_skew;
  gate.modal_hop = h.modal_hop();
  gate.max_hop = h.max_hop();
  gate.interior_mode = !h.counts.empty() && gate.modal_hop > 1 && gate.modal_hop < gate.max_hop;
  return gate;
}

Graph build_l1(const MlcnConfig& cfg, Rng& rng) {
  cfg.validate();
  GaussianGate last;
  for (std::size_t attempt = 0; attempt < cfg.gauss_attempts; ++attempt) {
    Graph g = gen_er_min_degree(cfg.nodes, cfg.l1_p, rng);
    last = evaluate_gaussian_gate(g, cfg.gauss_max_skew);
    if (last.passed()) return g;
  }
  throw GenerationError("L1 construction failed after " + std::to_string(cfg.gauss_attempts) +
                        " attempts; last candidate failed gate: " + last.failures());
}

Graph build_l2(const MlcnConfig& cfg, const Graph& l1, Rng& rng) {
  const auto live = l1.live_vertices();
  Graph g = gen_er(l1.vertex_count(), live, cfg.l2_p, rng);
  kill_dead_like(g, l1);
  prune_disconnected(g, l1);
  return g;
}

Graph build_l3(const MlcnConfig& cfg, const Graph& l2, Rng& rng) {
  Graph g = gen_scale_free(l2.vertex_count(), cfg.l3_m, rng);
  kill_dead_like(g, l2);
  prune_disconnected(g, l2);
  return g;
}

std::size_t prune_disconnected(Graph& upper, const Graph& lower) {
  const auto label = component_labels(lower);
  std::size_t removed = 0;
  for (const Edge& e : upper.edges()) {
    if (label[e.u] != label[e.v]) {
      upper.remove_edge(e);
      ++removed;
    }
  }
  return removed;
}

LayeredNetwork::LayeredNetwork(Graph l1, Graph l2, Graph l3)
    : layers_{std::move(l1), std::move(l2), std::move(l3)} {
  const std::size_t n = layers_[0].vertex_count();
  for (const Graph& g : layers_) {
    if (g.vertex_count() != n) throw ArgumentError("layers must share one vertex set");
    for (Vertex v = 0; v < n; ++v) {
      if (g.is_live(v) != layers_[0].is_live(v)) {
        throw ArgumentError("vertex " + std::to_string(v) + " liveness differs across layers");
      }
    }
  }
}

LayeredNetwork LayeredNetwork::build(const MlcnConfig& cfg, const LayerSeeds& seeds) {
  Rng r1(seeds.l1), r2(seeds.l2), r3(seeds.l3);
  Graph l1 = build_l1(cfg, r1);
  Graph l2 = build_l2(cfg, l1, r2);
  Graph l3 = build_l3(cfg, l2, r3);
  return LayeredNetwork(std::move(l1), std::move(l2), std::move(l3));
}

void LayeredNetwork::remove_l1_edge_deferred(Edge e) {
  if (!layers_[0].remove_edge(e)) {
    throw ArgumentError("(" + std::to_string(e.u) + ", " + std::to_string(e.v) +
                        ") is not an L1 edge");
  }
}

void LayeredNetwork::remove_l1_edge(Edge e) {
  remove_l1_edge_deferred(e);
  propagate_failures();
}

std::array<std::size_t, kLayerCount> LayeredNetwork::remove_node_deferred(Vertex v) {
  if (!is_live(v)) throw ArgumentError("vertex " + std::to_string(v) + " is not live");
  std::array<std::size_t, kLayerCount> dropped{};
  for (std::size_t k = 0; k < kLayerCount; ++k) dropped[k] = layers_[k].kill(v);
  return dropped;
}

std::array<std::size_t, kLayerCount> LayeredNetwork::remove_node(Vertex v) {
  auto dropped = remove_node_deferred(v);
  propagate_failures();
  return dropped;
}

std::array<std::size_t, 2> LayeredNetwork::propagate_failures() {
  const std::size_t pruned_l2 = prune_disconnected(layers_[1], layers_[0]);
  const std::size_t pruned_l3 = prune_disconnected(layers_[2], layers_[1]);
  return {pruned_l2, pruned_l3};
}

void LayeredNetwork::regenerate_upper(const MlcnConfig& cfg, Rng& l2_rng, Rng& l3_rng) {
  layers_[1] = build_l2(cfg, layers_[0], l2_rng);
  layers_[2] = build_l3(cfg, layers_[1], l3_rng);
}

bool LayeredNetwork::dependency_holds() const {
  for (std::size_t k = 1; k < kLayerCount; ++k) {
    const auto label = component_labels(layers_[k - 1]);
    for (const Edge& e : layers_[k].edges()) {
      if (label[e.u] != label[e.v]) return false;
    }
  }
  return true;
}

}  // namespace mlcn
