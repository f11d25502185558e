#include "cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <map>
#include <ostream>
#include <sstream>

#include <nlohmann/json.hpp>

#include "mlcn/centrality.hpp"
#include "mlcn/edge_list.hpp"
#include "mlcn/errors.hpp"
#include "mlcn/failure_engine.hpp"
#include "mlcn/generators.hpp"
#include "mlcn/layered_network.hpp"
#include "mlcn/paths.hpp"
#include "mlcn/reference.hpp"
#include "mlcn/reporting.hpp"

namespace mlcn::cli {
namespace {

using nlohmann::json;

struct RunOptions {
  ScenarioConfig scenario;
  std::string mode = "debc";
  std::string format = "csv";
  std::string out;
  std::size_t threads = 1;
  std::size_t chaos_window = kDefaultChaosWindow;
};

struct CalibrateOptions {
  MlcnConfig mlcn;
  std::uint64_t seed = 1;
  std::size_t samples = 200;
  std::string out;
};

void add_generation_flags(CLI::App& cmd, MlcnConfig& cfg) {
  cmd.add_option("--nodes", cfg.nodes, "Vertex count shared by all layers")->capture_default_str();
  cmd.add_option("--l1-p", cfg.l1_p, "L1 Erdos-Renyi edge probability")->capture_default_str();
  cmd.add_option("--l2-p", cfg.l2_p, "L2 Erdos-Renyi edge probability")->capture_default_str();
  cmd.add_option("--l3-m", cfg.l3_m, "L3 preferential-attachment edges per vertex")
      ->capture_default_str();
  cmd.add_option("--gauss-max-skew", cfg.gauss_max_skew,
                 "Largest |skewness| of the L1 hop-count histogram accepted")
      ->capture_default_str();
  cmd.add_option("--gauss-attempts", cfg.gauss_attempts, "L1 resampling budget")
      ->capture_default_str();
}

// Runs `body`, translating library errors into exit codes.
template <typename Body>
int guarded(std::ostream& err, Body body) {
  try {
    return body();
  } catch (const ArgumentError& e) {
    err << "usage error: " << e.what() << '\n';
    return kUsage;
  } catch (const GenerationError& e) {
    err << "generation error: " << e.what() << '\n';
    return kGeneration;
  } catch (const IoError& e) {
    err << "i/o error: " << e.what() << '\n';
    return kIo;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kCheckFailed;
  }
}

int do_run(RunOptions& opts, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    const auto mode = parse_mode(opts.mode);
    if (!mode) throw ArgumentError("unknown mode '" + opts.mode + "'");
    opts.scenario.mode = *mode;
    if (opts.threads < 1) throw ArgumentError("--threads must be >= 1");
    if (opts.chaos_window < 3) throw ArgumentError("--chaos-window must be >= 3");
    opts.scenario.validate();
    const OutputFormat format = opts.format == "json" ? OutputFormat::kJson : OutputFormat::kCsv;
    if (opts.out.empty()) opts.out = std::string("mlcn_") + opts.mode + "." + opts.format;

    const std::vector<MetricsSeries> runs = run_replicates(opts.scenario, opts.threads);
    emit(opts.out, format, runs, ReportOptions{opts.chaos_window});

    std::size_t truncated = 0;
    std::size_t min_steps = opts.scenario.failures;
    for (const auto& run : runs) {
      truncated += run.truncated ? 1 : 0;
      min_steps = std::min(min_steps, run.records.size());
    }
    std::size_t with_onset = 0;
    std::optional<std::size_t> first_onset;
    for (const auto& c : chaos_reports(runs, opts.chaos_window)) {
      if (c.layer != Layer::kL2 || c.parameter != Parameter::kAspl || !c.onset_step) continue;
      ++with_onset;
      if (!first_onset) first_onset = c.onset_step;
    }

    out << opts.mode << ": " << runs.size() << " replicate(s), " << min_steps << "/"
        << opts.scenario.failures << " steps completed, truncated: "
        << (truncated ? std::to_string(truncated) + " replicate(s)" : std::string("no"))
        << ", L2 ASPL chaos onset: ";
    if (first_onset) {
      out << "step " << *first_onset << " (" << with_onset << "/" << runs.size()
          << " replicates)";
    } else {
      out << "none";
    }
    out << ", wrote " << opts.out << '\n';
    return static_cast<int>(kOk);
  });
}

int do_calibrate(CalibrateOptions& opts, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    if (opts.samples < 1) throw ArgumentError("--samples must be >= 1");
    opts.mlcn.validate();

    std::size_t gate_passes = 0;
    std::size_t build_failures = 0;
    std::size_t ordered = 0;
    std::array<double, kLayerCount> tne_sum{};
    std::map<std::string, std::size_t> gate_failures;

    for (std::size_t i = 0; i < opts.samples; ++i) {
      Rng rng(derive_seed(opts.seed, i, 0, StreamTag::kLayer1));
      const GaussianGate gate =
          evaluate_gaussian_gate(gen_er_min_degree(opts.mlcn.nodes, opts.mlcn.l1_p, rng),
                                 opts.mlcn.gauss_max_skew);
      if (gate.passed()) {
        ++gate_passes;
      } else {
        ++gate_failures[gate.failures()];
      }

      try {
        const auto net = LayeredNetwork::build(opts.mlcn, construction_seeds(opts.seed, i, 1));
        std::array<std::size_t, kLayerCount> counts{};
        for (Layer layer : kAllLayers) {
          counts[static_cast<std::size_t>(layer)] = tne(net.layer(layer));
          tne_sum[static_cast<std::size_t>(layer)] +=
              static_cast<double>(counts[static_cast<std::size_t>(layer)]);
        }
        if (counts[0] < counts[1] && counts[1] < counts[2]) ++ordered;
      } catch (const GenerationError&) {
        ++build_failures;
      }
    }

    const double n = static_cast<double>(opts.samples);
    const std::size_t built = opts.samples - build_failures;
    const double pass_rate = static_cast<double>(gate_passes) / n;
    const double ordered_rate = static_cast<double>(ordered) / n;
    const bool ordering_ok = ordered_rate >= 0.95;

    json report = {{"samples", opts.samples},
                   {"seed", opts.seed},
                   {"nodes", opts.mlcn.nodes},
                   {"l1_p", opts.mlcn.l1_p},
                   {"l2_p", opts.mlcn.l2_p},
                   {"l3_m", opts.mlcn.l3_m},
                   {"gauss_max_skew", opts.mlcn.gauss_max_skew},
                   {"gauss_attempts", opts.mlcn.gauss_attempts},
                   {"l1_gate_pass_rate", pass_rate},
                   {"l1_gate_failures", gate_failures},
                   {"build_failures", build_failures},
                   {"ordering_rate", ordered_rate},
                   {"ordering_ok", ordering_ok}};
    for (Layer layer : kAllLayers) {
      const double mean =
          built ? tne_sum[static_cast<std::size_t>(layer)] / static_cast<double>(built) : 0.0;
      report["mean_tne"][layer_name(layer)] = mean;
    }

    out << "samples: " << opts.samples << '\n'
        << "L1 gaussian gate pass rate: " << pass_rate << '\n'
        << "mean tne: L1 " << report["mean_tne"]["L1"].get<double>() << ", L2 "
        << report["mean_tne"]["L2"].get<double>() << ", L3 "
        << report["mean_tne"]["L3"].get<double>() << '\n'
        << "build failures: " << build_failures << '\n'
        << "tne(L1) < tne(L2) < tne(L3) held in " << ordered_rate * 100.0 << "% of samples: "
        << (ordering_ok ? "ok" : "FAILED") << '\n';

    if (!opts.out.empty()) {
      std::ofstream file(opts.out, std::ios::binary | std::ios::trunc);
      if (!file) throw IoError(opts.out, "cannot open for writing");
      file << report.dump(2) << '\n';
      if (!file) throw IoError(opts.out, "write failed");
    }
    return static_cast<int>(ordering_ok ? kOk : kCheckFailed);
  });
}

// Small hand-checkable graphs with brute-force expected values.
struct Fixture {
  std::string name;
  Graph graph;
};

Graph from_edges(std::size_t n, std::initializer_list<std::pair<Vertex, Vertex>> edges) {
  Graph g(n);
  for (auto [a, b] : edges) g.add_edge(a, b);
  return g;
}

std::vector<Fixture> graph_fixtures() {
  return {
      {"p3", from_edges(3, {{0, 1}, {1, 2}})},
      {"p4", from_edges(4, {{0, 1}, {1, 2}, {2, 3}})},
      {"c4", from_edges(4, {{0, 1}, {1, 2}, {2, 3}, {0, 3}})},
      {"star", from_edges(4, {{0, 1}, {0, 2}, {0, 3}})},
      {"two_components", from_edges(4, {{0, 1}, {2, 3}})},
  };
}

json edges_json(const Graph& g) {
  json out = json::array();
  for (const Edge& e : g.edges()) out.push_back({e.u, e.v});
  return out;
}

void write_text(const std::filesystem::path& path, const std::string& text) {
  std::ofstream file(path, std::ios::binary | std::ios::trunc);
  if (!file) throw IoError(path.string(), "cannot open for writing");
  file << text;
  if (!file) throw IoError(path.string(), "write failed");
}

std::string edge_list_text(const Graph& g) {
  std::ostringstream s;
  write_edge_list(s, g);
  return s.str();
}

json graph_sidecar(const Fixture& f) {
  const reference::Metrics m = reference::brute_force(f.graph);
  json doc;
  doc["name"] = f.name;
  doc["n"] = f.graph.vertex_count();
  doc["edges"] = edges_json(f.graph);
  doc["tne"] = f.graph.edge_count();
  doc["tspc"] = m.tspc;
  doc["reachable_pairs"] = m.reachable_pairs;
  doc["distance_sum"] = m.distance_sum;
  doc["aspl"] = m.reachable_pairs
                    ? json(static_cast<double>(m.distance_sum) /
                           static_cast<double>(m.reachable_pairs))
                    : json(nullptr);
  json hist = json::object();
  for (const auto& [hop, count] : m.histogram) hist[std::to_string(hop)] = count;
  doc["hop_histogram"] = hist;
  doc["node_betweenness"] = m.node_betweenness;

  json ebc = json::array();
  double best = -1.0;
  for (const auto& [e, score] : m.edge_betweenness) {
    ebc.push_back({{"edge", {e.u, e.v}}, {"score", score}});
    best = std::max(best, score);
  }
  doc["edge_betweenness"] = ebc;
  json top = json::array();
  for (const auto& [e, score] : m.edge_betweenness) {
    if (score == best) top.push_back({e.u, e.v});
  }
  doc["max_ebc_edges"] = top;
  return doc;
}

int do_fixtures(const std::string& dir, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    const std::filesystem::path root(dir);
    std::error_code ec;
    std::filesystem::create_directories(root, ec);
    if (ec) throw IoError(dir, ec.message());

    std::size_t files = 0;
    for (const Fixture& f : graph_fixtures()) {
      write_text(root / (f.name + ".edges"), edge_list_text(f.graph));
      write_text(root / (f.name + ".json"), graph_sidecar(f).dump(2) + "\n");
      files += 2;
    }

    // Failing L1 edge (1, 2) disconnects {0, 1} from {2, 3} in L1, which
    // prunes L2 edge (1, 2), which in turn prunes L3 edge (0, 2).
    std::vector<Graph> chain{from_edges(4, {{0, 1}, {1, 2}, {2, 3}}),
                             from_edges(4, {{0, 1}, {1, 2}, {2, 3}}),
                             from_edges(4, {{0, 1}, {0, 2}, {2, 3}})};
    json sidecar;
    sidecar["name"] = "chain";
    sidecar["n"] = 4;
    sidecar["failed_l1_edge"] = {1, 2};
    for (std::size_t k = 0; k < chain.size(); ++k) {
      const std::string layer = "l" + std::to_string(k + 1);
      write_text(root / ("chain_" + layer + ".edges"), edge_list_text(chain[k]));
      sidecar["before"][layer] = edges_json(chain[k]);
      ++files;
    }
    chain[0].remove_edge(Edge{1, 2});
    reference::prune_to_fixpoint(chain);
    for (std::size_t k = 0; k < chain.size(); ++k) {
      sidecar["after"]["l" + std::to_string(k + 1)] = edges_json(chain[k]);
    }
    write_text(root / "chain.json", sidecar.dump(2) + "\n");
    ++files;

    out << "wrote " << files << " fixture files to " << root.string() << '\n';
    return static_cast<int>(kOk);
  });
}

}  // namespace

int main(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Failure simulator for a three-layer dependent network"};
  app.name("mlcn_sim");
  app.require_subcommand(1);

  RunOptions run_opts;
  auto* run = app.add_subcommand("run", "Run a failure scenario and write metrics");
  run->add_option("--mode", run_opts.mode, "Failure ordering")
      ->check(CLI::IsMember({"sebc", "debc", "snbc", "dnbc"}))
      ->capture_default_str();
  add_generation_flags(*run, run_opts.scenario.mlcn);
  run->add_option("--failures", run_opts.scenario.failures, "Edges or nodes to fail")
      ->capture_default_str();
  run->add_option("--seed", run_opts.scenario.seed, "Master seed")->capture_default_str();
  run->add_option("--replicates", run_opts.scenario.replicates, "Independent runs")
      ->capture_default_str();
  run->add_option("--threads", run_opts.threads, "Worker threads for replicates")
      ->capture_default_str();
  run->add_option("--format", run_opts.format, "Output format")
      ->check(CLI::IsMember({"csv", "json"}))
      ->capture_default_str();
  run->add_option("--out", run_opts.out, "Output path (default mlcn_<mode>.<format>)");
  run->add_option("--chaos-window", run_opts.chaos_window, "Window for the chaos-onset index")
      ->capture_default_str();

  CalibrateOptions cal_opts;
  auto* calibrate = app.add_subcommand("calibrate", "Monte-Carlo check of generation defaults");
  add_generation_flags(*calibrate, cal_opts.mlcn);
  calibrate->add_option("--samples", cal_opts.samples, "Networks to sample")->capture_default_str();
  calibrate->add_option("--seed", cal_opts.seed, "Master seed")->capture_default_str();
  calibrate->add_option("--out", cal_opts.out, "Optional JSON report path");

  std::string fixtures_dir = "fixtures";
  auto* fixtures = app.add_subcommand("fixtures", "Write small reference graphs with expected values");
  fixtures->add_option("--out", fixtures_dir, "Output directory")->capture_default_str();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? static_cast<int>(kOk) : static_cast<int>(kUsage);
  }

  if (run->parsed()) return do_run(run_opts, out, err);
  if (calibrate->parsed()) return do_calibrate(cal_opts, out, err);
  return do_fixtures(fixtures_dir, out, err);
}

}  // namespace mlcn::cli
