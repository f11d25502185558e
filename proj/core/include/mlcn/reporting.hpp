#pragma once

#include <array>
#include <cstddef>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "mlcn/failure_engine.hpp"

namespace mlcn {

enum class Parameter : std::size_t { kAspl = 0, kTspc = 1, kTne = 2 };
inline constexpr std::array<Parameter, 3> kAllParameters{Parameter::kAspl, Parameter::kTspc,
                                                         Parameter::kTne};

const char* parameter_name(Parameter p) noexcept;

using ValueSeries = std::vector<std::optional<double>>;

// One parameter of one layer, one entry per record.
ValueSeries extract(const MetricsSeries& series, Layer layer, Parameter parameter);

// Per-record mean across replicates, aligned by record index. Entries
// average over the replicates that have a value there; absent when none do.
ValueSeries mean_across(std::span<const MetricsSeries> runs, Layer layer, Parameter parameter);

// Min-max rescaling of one parameter. Absent entries stay absent. A
// constant (or all-absent) series maps to zeros and sets `constant`.
struct NormalizedParameter {
  ValueSeries values;
  std::optional<double> min;
  std::optional<double> max;
  bool constant = false;
};

NormalizedParameter normalize_values(const ValueSeries& values);

struct NormalizedSeries {
  std::array<std::array<NormalizedParameter, 3>, kLayerCount> parameters;

  const NormalizedParameter& at(Layer layer, Parameter parameter) const {
    return parameters[static_cast<std::size_t>(layer)][static_cast<std::size_t>(parameter)];
  }
};

// Throws ArgumentError when the series has no records.
NormalizedSeries normalize(const MetricsSeries& series);

// Population standard deviation of the first differences of `values`.
// Zero for fewer than two differences.
double first_difference_dispersion(std::span<const double> values);

inline constexpr double kDefaultChaosThreshold = 2.0;
inline constexpr std::size_t kDefaultChaosWindow = 10;

struct ChaosReport {
  std::optional<std::size_t> onset;  // index into the input sequence
  double early_dispersion = 0.0;     // dispersion of the first window
  double late_dispersion = 0.0;      // dispersion of the last window
  std::size_t window = 0;
};

// Rolling first-difference dispersion over windows of `window` values. The
// onset is the first index whose trailing window's dispersion exceeds
// `threshold` times the first window's, held for ceil(window/2) consecutive
// indices. Dispersions below 1e-9 of the series range count as zero.
// Requires window >= 3 and values.size() >= 2 * window.
ChaosReport chaos_index(std::span<const double> values, std::size_t window,
                        double threshold = kDefaultChaosThreshold);

struct ChaosEntry {
  std::size_t replicate = 0;
  Layer layer = Layer::kL1;
  Parameter parameter = Parameter::kAspl;
  ChaosReport report;
  std::optional<std::size_t> onset_step;
};

// Chaos reports for every (replicate, layer, parameter) whose series is
// fully present and at least 2 * window long.
std::vector<ChaosEntry> chaos_reports(std::span<const MetricsSeries> runs, std::size_t window);

enum class OutputFormat { kCsv, kJson };

struct ReportOptions {
  std::size_t chaos_window = kDefaultChaosWindow;
};

inline constexpr const char* kCsvHeader =
    "mode,replicate,step,layer,aspl,tspc,tne,aspl_norm,tspc_norm,tne_norm";

// One data row per (record, layer), sorted by replicate, step, layer.
void write_csv(std::ostream& out, std::span<const MetricsSeries> runs);

std::string to_json_text(std::span<const MetricsSeries> runs, const ReportOptions& options);

// Writes the chosen format to `path`. Throws IoError naming the path.
void emit(const std::filesystem::path& path, OutputFormat format,
          std::span<const MetricsSeries> runs, const ReportOptions& options = {});

struct CsvRow {
  std::string mode;
  std::size_t replicate = 0;
  std::size_t step = 0;
  std::string layer;
  std::optional<double> aspl;
  std::uint64_t tspc = 0;
  std::size_t tne = 0;
  std::optional<double> aspl_norm;
  double tspc_norm = 0.0;
  double tne_norm = 0.0;
};

// Parses output of write_csv. Throws ArgumentError on malformed input.
std::vector<CsvRow> read_csv(std::istream& in);

}  // namespace mlcn
