#include "mlcn/failure_engine.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <thread>

#include "mlcn/centrality.hpp"
#include "mlcn/errors.hpp"
#include "mlcn/paths.hpp"

namespace mlcn {
namespace {

MetricsSeries empty_series(const ScenarioConfig& cfg, std::size_t replicate) {
  MetricsSeries s;
  s.mode = cfg.mode;
  s.config = cfg;
  s.replicate = replicate;
  return s;
}

LayeredNetwork build_or_explain(const ScenarioConfig& cfg, std::size_t replicate,
                                std::size_t step) {
  try {
    return LayeredNetwork::build(cfg.mlcn, construction_seeds(cfg.seed, replicate, step));
  } catch (const GenerationError& e) {
    throw GenerationError(std::string(e.what()) + " [replicate " + std::to_string(replicate) +
                          ", K " + std::to_string(step) + "]");
  }
}

void require_mode(const ScenarioConfig& cfg, FailureMode expected) {
  if (cfg.mode != expected) {
    throw ArgumentError(std::string("scenario configured for ") + mode_name(cfg.mode) +
                        ", not " + mode_name(expected));
  }
  cfg.validate();
}

template <typename StepFn>
MetricsSeries run_static(const ScenarioConfig& cfg, std::size_t replicate, StepFn step_fn,
                         const StepObserver& observer) {
  MetricsSeries series = empty_series(cfg, replicate);
  for (std::size_t k = 1; k <= cfg.failures; ++k) {
    LayeredNetwork net = build_or_explain(cfg, replicate, k);
    const NetworkMetrics before = measure(net);
    MetricsRecord rec = step_fn(net, k);
    rec.baseline = before;
    if (observer) observer(rec, net);
    const std::size_t applied = rec.failed_edges.size() + rec.failed_nodes.size();
    series.records.push_back(std::move(rec));
    if (applied < k) {
      series.truncated = true;
      series.truncation_reason = "only " + std::to_string(applied) + " elements could fail at K " +
                                 std::to_string(k);
      break;
    }
  }
  return series;
}

template <typename StepFn>
MetricsSeries run_dynamic(const ScenarioConfig& cfg, std::size_t replicate, StepFn step_fn,
                          const char* exhausted, const StepObserver& observer) {
  MetricsSeries series = empty_series(cfg, replicate);
  LayeredNetwork net = build_or_explain(cfg, replicate, 1);
  series.initial = measure(net);
  for (std::size_t step = 1; step <= cfg.failures; ++step) {
    std::optional<MetricsRecord> rec = step_fn(net, step);
    if (!rec) {
      series.truncated = true;
      series.truncation_reason = std::string(exhausted) + " before step " + std::to_string(step);
      break;
    }
    if (observer) observer(*rec, net);
    series.records.push_back(std::move(*rec));
    if (step < cfg.failures) {
      Rng r2(derive_seed(cfg.seed, replicate, step, StreamTag::kLayer2Regen));
      Rng r3(derive_seed(cfg.seed, replicate, step, StreamTag::kLayer3Regen));
      net.regenerate_upper(cfg.mlcn, r2, r3);
    }
  }
  return series;
}

}  // namespace

const char* mode_name(FailureMode mode) noexcept {
  switch (mode) {
    case FailureMode::kSebc: return "sebc";
    case FailureMode::kDebc: return "debc";
    case FailureMode::kSnbc: return "snbc";
    case FailureMode::kDnbc: return "dnbc";
  }
  return "?";
}

std::optional<FailureMode> parse_mode(std::string_view text) {
  for (FailureMode m : {FailureMode::kSebc, FailureMode::kDebc, FailureMode::kSnbc,
                        FailureMode::kDnbc}) {
    if (text == mode_name(m)) return m;
  }
  return std::nullopt;
}

void ScenarioConfig::validate() const {
  if (failures < 1) throw ArgumentError("failures must be >= 1");
  if (is_node_mode(mode) && failures >= mlcn.nodes) {
    throw ArgumentError("node failure modes need failures < nodes (" + std::to_string(failures) +
                        " >= " + std::to_string(mlcn.nodes) + ")");
  }
  if (replicates < 1) throw ArgumentError("replicates must be >= 1");
  mlcn.validate();
  if (!mlcn.expected_ordering_holds()) {
    throw ArgumentError("expected edge counts must satisfy L1 < L2 < L3");
  }
}

NetworkMetrics measure(const LayeredNetwork& net) {
  NetworkMetrics out;
  for (Layer layer : kAllLayers) {
    const Graph& g = net.layer(layer);
    const PathSummary summary = summarize_paths(g);
    auto& m = out[static_cast<std::size_t>(layer)];
    m.aspl = summary.aspl();
    m.tspc = summary.shortest_path_count;
    m.tne = tne(g);
  }
  return out;
}

LayerSeeds construction_seeds(std::uint64_t master, std::size_t replicate, std::size_t step) {
  return {derive_seed(master, replicate, step, StreamTag::kLayer1),
          derive_seed(master, replicate, step, StreamTag::kLayer2),
          derive_seed(master, replicate, step, StreamTag::kLayer3)};
}

MetricsRecord fail_top_edges(LayeredNetwork& net, std::size_t k) {
  MetricsRecord rec;
  rec.step = k;
  rec.failed_edges = top_ranked(edge_betweenness(net.l1()), k);
  for (const Edge& e : rec.failed_edges) net.remove_l1_edge_deferred(e);
  net.propagate_failures();
  rec.layers = measure(net);
  return rec;
}

MetricsRecord fail_top_nodes(LayeredNetwork& net, std::size_t k) {
  MetricsRecord rec;
  rec.step = k;
  rec.failed_nodes = top_ranked(node_betweenness(net.l1()), k);
  for (Vertex v : rec.failed_nodes) net.remove_node_deferred(v);
  net.propagate_failures();
  rec.layers = measure(net);
  return rec;
}

std::optional<MetricsRecord> fail_next_edge(LayeredNetwork& net, std::size_t step) {
  if (net.l1().edge_count() == 0) return std::nullopt;
  MetricsRecord rec = fail_top_edges(net, 1);
  rec.step = step;
  return rec;
}

std::optional<MetricsRecord> fail_next_node(LayeredNetwork& net, std::size_t step) {
  if (net.l1().live_count() < 2) return std::nullopt;
  MetricsRecord rec = fail_top_nodes(net, 1);
  rec.step = step;
  return rec;
}

MetricsSeries run_sebc(const ScenarioConfig& cfg, std::size_t replicate,
                       const StepObserver& observer) {
  require_mode(cfg, FailureMode::kSebc);
  return run_static(cfg, replicate, fail_top_edges, observer);
}

MetricsSeries run_snbc(const ScenarioConfig& cfg, std::size_t replicate,
                       const StepObserver& observer) {
  require_mode(cfg, FailureMode::kSnbc);
  return run_static(cfg, replicate, fail_top_nodes, observer);
}

MetricsSeries run_debc(const ScenarioConfig& cfg, std::size_t replicate,
                       const StepObserver& observer) {
  require_mode(cfg, FailureMode::kDebc);
  return run_dynamic(cfg, replicate, fail_next_edge, "L1 ran out of edges", observer);
}

MetricsSeries run_dnbc(const ScenarioConfig& cfg, std::size_t replicate,
                       const StepObserver& observer) {
  require_mode(cfg, FailureMode::kDnbc);
  return run_dynamic(cfg, replicate, fail_next_node, "fewer than 2 live L1 vertices", observer);
}

MetricsSeries run_scenario(const ScenarioConfig& cfg, std::size_t replicate,
                           const StepObserver& observer) {
  switch (cfg.mode) {
    case FailureMode::kSebc: return run_sebc(cfg, replicate, observer);
    case FailureMode::kDebc: return run_debc(cfg, replicate, observer);
    case FailureMode::kSnbc: return run_snbc(cfg, replicate, observer);
    case FailureMode::kDnbc: return run_dnbc(cfg, replicate, observer);
  }
  throw ArgumentError("unknown failure mode");
}

std::vector<MetricsSeries> run_replicates(const ScenarioConfig& cfg, std::size_t workers) {
  cfg.validate();
  const std::size_t count = cfg.replicates;
  std::vector<std::optional<MetricsSeries>> results(count);
  std::vector<std::exception_ptr> errors(count);

  std::atomic<std::size_t> next{0};
  auto work = [&] {
    for (std::size_t r = next++; r < count; r = next++) {
      try {
        results[r] = run_scenario(cfg, r);
      } catch (...) {
        errors[r] = std::current_exception();
      }
    }
  };

  workers = std::clamp<std::size_t>(workers, 1, count);
  if (workers == 1) {
    work();
  } else {
    std::vector<std::jthread> pool;
    pool.reserve(workers);
    for (std::size_t i = 0; i < workers; ++i) pool.emplace_back(work);
  }

  std::vector<MetricsSeries> out;
  out.reserve(count);
  for (std::size_t r = 0; r < count; ++r) {
    if (errors[r]) std::rethrow_exception(errors[r]);
    out.push_back(std::move(*results[r]));
  }
  return out;
}

}  // namespace mlcn
