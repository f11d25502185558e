#include "mlcn/reporting.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

#include <nlohmann/json.hpp>

#include "mlcn/errors.hpp"

namespace mlcn {
namespace {

using nlohmann::json;

std::string format_double(double v) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, res.ptr);
}

std::optional<double> raw_value(const LayerMetrics& m, Parameter p) {
  switch (p) {
    case Parameter::kAspl: return m.aspl;
    case Parameter::kTspc: return static_cast<double>(m.tspc);
    case Parameter::kTne: return static_cast<double>(m.tne);
  }
  return std::nullopt;
}

double population_stddev(std::span<const double> xs) {
  if (xs.empty()) return 0.0;
  double mean = 0;
  for (double x : xs) mean += x;
  mean /= static_cast<double>(xs.size());
  double var = 0;
  for (double x : xs) var += (x - mean) * (x - mean);
  return std::sqrt(var / static_cast<double>(xs.size()));
}

json optional_number(const std::optional<double>& v) { return v ? json(*v) : json(nullptr); }

json metrics_json(const NetworkMetrics& metrics) {
  json out = json::array();
  for (Layer layer : kAllLayers) {
    const auto& m = metrics[static_cast<std::size_t>(layer)];
    out.push_back({{"layer", layer_name(layer)},
                   {"aspl", optional_number(m.aspl)},
                   {"tspc", m.tspc},
                   {"tne", m.tne}});
  }
  return out;
}

json config_json(const ScenarioConfig& cfg, const ReportOptions& options) {
  return {{"mode", mode_name(cfg.mode)},
          {"nodes", cfg.mlcn.nodes},
          {"l1_p", cfg.mlcn.l1_p},
          {"l2_p", cfg.mlcn.l2_p},
          {"l3_m", cfg.mlcn.l3_m},
          {"gauss_max_skew", cfg.mlcn.gauss_max_skew},
          {"gauss_attempts", cfg.mlcn.gauss_attempts},
          {"failures", cfg.failures},
          {"seed", cfg.seed},
          {"replicates", cfg.replicates},
          {"chaos_window", options.chaos_window}};
}

template <typename T>
T parse_number(std::string_view field, const char* name) {
  T value{};
  const auto res = std::from_chars(field.data(), field.data() + field.size(), value);
  if (res.ec != std::errc{} || res.ptr != field.data() + field.size()) {
    throw ArgumentError(std::string("malformed CSV field ") + name + ": '" + std::string(field) +
                        "'");
  }
  return value;
}

std::optional<double> parse_optional(std::string_view field, const char* name) {
  if (field.empty()) return std::nullopt;
  return parse_number<double>(field, name);
}

}  // namespace

const char* parameter_name(Parameter p) noexcept {
  switch (p) {
    case Parameter::kAspl: return "aspl";
    case Parameter::kTspc: return "tspc";
    case Parameter::kTne: return "tne";
  }
  return "?";
}

ValueSeries extract(const MetricsSeries& series, Layer layer, Parameter parameter) {
  ValueSeries out;
  out.reserve(series.records.size());
  for (const auto& rec : series.records) {
    out.push_back(raw_value(rec.layers[static_cast<std::size_t>(layer)], parameter));
  }
  return out;
}

ValueSeries mean_across(std::span<const MetricsSeries> runs, Layer layer, Parameter parameter) {
  std::size_t length = 0;
  for (const auto& run : runs) length = std::max(length, run.records.size());
  ValueSeries out(length);
  for (std::size_t i = 0; i < length; ++i) {
    double sum = 0;
    std::size_t count = 0;
    for (const auto& run : runs) {
      if (i >= run.records.size()) continue;
      if (auto v = raw_value(run.records[i].layers[static_cast<std::size_t>(layer)], parameter)) {
        sum += *v;
        ++count;
      }
    }
    if (count > 0) out[i] = sum / static_cast<double>(count);
  }
  return out;
}

NormalizedParameter normalize_values(const ValueSeries& values) {
  NormalizedParameter out;
  out.values.resize(values.size());
  for (const auto& v : values) {
    if (!v) continue;
    out.min = out.min ? std::min(*out.min, *v) : *v;
    out.max = out.max ? std::max(*out.max, *v) : *v;
  }
  out.constant = !out.min || *out.min == *out.max;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (!values[i]) continue;
    out.values[i] = out.constant ? 0.0 : (*values[i] - *out.min) / (*out.max - *out.min);
  }
  return out;
}

NormalizedSeries normalize(const MetricsSeries& series) {
  if (series.records.empty()) throw ArgumentError("cannot normalize an empty series");
  NormalizedSeries out;
  for (Layer layer : kAllLayers) {
    for (Parameter p : kAllParameters) {
      out.parameters[static_cast<std::size_t>(layer)][static_cast<std::size_t>(p)] =
          normalize_values(extract(series, layer, p));
    }
  }
  return out;
}

double first_difference_dispersion(std::span<const double> values) {
  if (values.size() < 3) return 0.0;
  std::vector<double> diffs(values.size() - 1);
  for (std::size_t i = 0; i + 1 < values.size(); ++i) diffs[i] = values[i + 1] - values[i];
  return population_stddev(diffs);
}

ChaosReport chaos_index(std::span<const double> values, std::size_t window, double threshold) {
  if (window < 3) throw ArgumentError("chaos window must be >= 3");
  if (values.size() < 2 * window) {
    throw ArgumentError("series of length " + std::to_string(values.size()) +
                        " is shorter than twice the chaos window " + std::to_string(window));
  }

  ChaosReport report;
  report.window = window;
  // dispersion[t] covers values[t - window + 1 .. t].
  auto dispersion_at = [&](std::size_t t) {
    return first_difference_dispersion(values.subspan(t + 1 - window, window));
  };
  const std::size_t first = window - 1;
  const std::size_t last = values.size() - 1;
  report.early_dispersion = dispersion_at(first);
  report.late_dispersion = dispersion_at(last);

  const auto [lo, hi] = std::minmax_element(values.begin(), values.end());
  const double floor = 1e-9 * (*hi - *lo);
  if (*hi == *lo) return report;

  const double baseline = report.early_dispersion <= floor ? 0.0 : report.early_dispersion;
  auto exceeds = [&](std::size_t t) {
    const double d = dispersion_at(t);
    return d > floor && d > threshold * baseline;
  };
  const std::size_t sustain = (window + 1) / 2;
  for (std::size_t t = first + 1; t + sustain - 1 <= last; ++t) {
    bool held = true;
    for (std::size_t j = t; j < t + sustain && held; ++j) held = exceeds(j);
    if (held) {
      report.onset = t;
      break;
    }
  }
  return report;
}

std::vector<ChaosEntry> chaos_reports(std::span<const MetricsSeries> runs, std::size_t window) {
  std::vector<ChaosEntry> out;
  for (const auto& run : runs) {
    for (Layer layer : kAllLayers) {
      for (Parameter p : kAllParameters) {
        const ValueSeries raw = extract(run, layer, p);
        if (raw.size() < 2 * window || window < 3) continue;
        if (std::any_of(raw.begin(), raw.end(), [](const auto& v) { return !v.has_value(); })) {
          continue;
        }
        std::vector<double> values;
        values.reserve(raw.size());
        for (const auto& v : raw) values.push_back(*v);
        ChaosEntry entry{run.replicate, layer, p, chaos_index(values, window), std::nullopt};
        if (entry.report.onset) entry.onset_step = run.records[*entry.report.onset].step;
        out.push_back(entry);
      }
    }
  }
  return out;
}

void write_csv(std::ostream& out, std::span<const MetricsSeries> runs) {
  std::vector<const MetricsSeries*> ordered;
  for (const auto& run : runs) ordered.push_back(&run);
  std::stable_sort(ordered.begin(), ordered.end(),
                   [](const auto* a, const auto* b) { return a->replicate < b->replicate; });

  out << kCsvHeader << '\n';
  for (const MetricsSeries* run : ordered) {
    if (run->records.empty()) continue;
    const NormalizedSeries norm = normalize(*run);
    for (std::size_t i = 0; i < run->records.size(); ++i) {
      const auto& rec = run->records[i];
      for (Layer layer : kAllLayers) {
        const auto& m = rec.layers[static_cast<std::size_t>(layer)];
        const auto& aspl_norm = norm.at(layer, Parameter::kAspl).values[i];
        out << mode_name(run->mode) << ',' << run->replicate << ',' << rec.step << ','
            << layer_name(layer) << ',' << (m.aspl ? format_double(*m.aspl) : std::string())
            << ',' << m.tspc << ',' << m.tne << ','
            << (aspl_norm ? format_double(*aspl_norm) : std::string()) << ','
            << format_double(*norm.at(layer, Parameter::kTspc).values[i]) << ','
            << format_double(*norm.at(layer, Parameter::kTne).values[i]) << '\n';
      }
    }
  }
}

std::string to_json_text(std::span<const MetricsSeries> runs, const ReportOptions& options) {
  json doc;
  doc["config"] = runs.empty() ? json(nullptr) : config_json(runs.front().config, options);
  json series_list = json::array();
  const auto chaos = chaos_reports(runs, options.chaos_window);

  for (const auto& run : runs) {
    json s;
    s["mode"] = mode_name(run.mode);
    s["replicate"] = run.replicate;
    s["truncated"] = run.truncated;
    s["truncation_reason"] = run.truncation_reason;
    s["initial"] = run.initial ? metrics_json(*run.initial) : json(nullptr);

    json records = json::array();
    std::optional<NormalizedSeries> norm;
    if (!run.records.empty()) norm = normalize(run);
    for (std::size_t i = 0; i < run.records.size(); ++i) {
      const auto& rec = run.records[i];
      json layers = metrics_json(rec.layers);
      for (Layer layer : kAllLayers) {
        auto& entry = layers[static_cast<std::size_t>(layer)];
        for (Parameter p : kAllParameters) {
          entry[std::string(parameter_name(p)) + "_norm"] =
              optional_number(norm->at(layer, p).values[i]);
        }
      }
      json failed_edges = json::array();
      for (const Edge& e : rec.failed_edges) failed_edges.push_back({e.u, e.v});
      records.push_back({{"step", rec.step},
                         {"layers", layers},
                         {"baseline", rec.baseline ? metrics_json(*rec.baseline) : json(nullptr)},
                         {"failed_edges", failed_edges},
                         {"failed_nodes", rec.failed_nodes}});
    }
    s["records"] = records;

    json normalization = json::object();
    if (norm) {
      for (Layer layer : kAllLayers) {
        for (Parameter p : kAllParameters) {
          const auto& np = norm->at(layer, p);
          normalization[layer_name(layer)][parameter_name(p)] = {
              {"min", optional_number(np.min)},
              {"max", optional_number(np.max)},
              {"constant", np.constant}};
        }
      }
    }
    s["normalization"] = normalization;

    json chaos_list = json::array();
    for (const auto& c : chaos) {
      if (c.replicate != run.replicate) continue;
      chaos_list.push_back(
          {{"layer", layer_name(c.layer)},
           {"parameter", parameter_name(c.parameter)},
           {"window", c.report.window},
           {"onset_index", c.report.onset ? json(*c.report.onset) : json(nullptr)},
           {"onset_step", c.onset_step ? json(*c.onset_step) : json(nullptr)},
           {"early_dispersion", c.report.early_dispersion},
           {"late_dispersion", c.report.late_dispersion}});
    }
    s["chaos"] = chaos_list;
    series_list.push_back(std::move(s));
  }
  doc["series"] = std::move(series_list);
  return doc.dump(2) + "\n";
}

void emit(const std::filesystem::path& path, OutputFormat format,
          std::span<const MetricsSeries> runs, const ReportOptions& options) {
  std::ostringstream body;
  if (format == OutputFormat::kCsv) {
    write_csv(body, runs);
  } else {
    body << to_json_text(runs, options);
  }
  std::ofstream file(path, std::ios::binary | std::ios::trunc);
  if (!file) throw IoError(path.string(), "cannot open for writing");
  const std::string text = body.str();
  file.write(text.data(), static_cast<std::streamsize>(text.size()));
  file.close();
  if (!file) throw IoError(path.string(), "write failed");
}

std::vector<CsvRow> read_csv(std::istream& in) {
  std::string line;
  if (!std::getline(in, line) || line != kCsvHeader) {
    throw ArgumentError("CSV header does not match the expected schema");
  }
  std::vector<CsvRow> rows;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::vector<std::string_view> fields;
    std::string_view rest(line);
    while (true) {
      const auto comma = rest.find(',');
      fields.push_back(rest.substr(0, comma));
      if (comma == std::string_view::npos) break;
      rest.remove_prefix(comma + 1);
    }
    if (fields.size() != 10) throw ArgumentError("CSV row has " + std::to_string(fields.size()) +
                                                 " fields, expected 10");
    CsvRow row;
    row.mode = fields[0];
    row.replicate = parse_number<std::size_t>(fields[1], "replicate");
    row.step = parse_number<std::size_t>(fields[2], "step");
    row.layer = fields[3];
    row.aspl = parse_optional(fields[4], "aspl");
    row.tspc = parse_number<std::uint64_t>(fields[5], "tspc");
    row.tne = parse_number<std::size_t>(fields[6], "tne");
    row.aspl_norm = parse_optional(fields[7], "aspl_norm");
    row.tspc_norm = parse_number<double>(fields[8], "tspc_norm");
    row.tne_norm = parse_number<double>(fields[9], "tne_norm");
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace mlcn
