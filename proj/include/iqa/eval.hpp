#pragma once

// Correlation statistics, dataset evaluation and timing benchmarks.

#include <filesystem>
#include <functional>
#include <iosfwd>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "iqa/db_metrics.hpp"
#include "iqa/image.hpp"
#include "iqa/nr_metrics.hpp"

namespace iqa::eval {

/// Ascending ranks from 1; tied values share the mean of their ranks.
std::vector<double> rank(std::span<const double> values);

bool has_ties(std::span<const double> values);

/// 1 - 6 sum d^2 / (n (n^2 - 1)); only valid without ties.
double srcc_closed_form(std::span<const double> x, std::span<const double> y);
/// Pearson correlation of average ranks.
double srcc_rank_pearson(std::span<const double> x, std::span<const double> y);
/// Closed form when both inputs are tie-free, ranked Pearson otherwise.
double srcc(std::span<const double> x, std::span<const double> y);
/// Kendall tau-b.
double krcc(std::span<const double> x, std::span<const double> y);
/// Pearson correlation, no logistic remapping.
double plcc(std::span<const double> x, std::span<const double> y);

enum class Polarity { higher_is_better, lower_is_better };

struct ManifestRecord {
  std::filesystem::path dist;
  std::optional<std::filesystem::path> ref;
  double score = 0.0;
  int line = 0;
};

struct DatasetManifest {
  std::vector<ManifestRecord> records;
  Polarity polarity = Polarity::higher_is_better;
};

/// CSV with header `dist,ref,score`. An optional first line
/// `# polarity: mos|dmos` declares the score direction (mos by default).
/// Relative paths resolve against `base_dir`.
DatasetManifest read_manifest(std::istream& in, const std::filesystem::path& base_dir = {});
DatasetManifest load_manifest(const std::filesystem::path& path);
void write_manifest(std::ostream& out, const DatasetManifest& manifest);

enum class MetricKind { full_reference, no_reference, distribution };

/// Shared state some metrics need beyond the images themselves.
struct MetricContext {
  std::shared_ptr<const nr::BrisqueModel> brisque_model;
  db::PairwiseOptions db;
};

struct MetricInfo {
  std::string name;
  MetricKind kind;
  bool higher_is_better;
  /// `ref` is null for no-reference metrics.
  std::function<double(const Image* ref, const Image& dist, const MetricContext& ctx)> compute;

  bool needs_reference() const { return kind != MetricKind::no_reference; }
};

const std::vector<MetricInfo>& metric_registry();
/// Null when the name is unknown.
const MetricInfo* find_metric(std::string_view name);
std::vector<std::string> metric_names();
std::vector<std::string> full_reference_metric_names();

struct MetricCorrelation {
  std::string metric;
  double srcc = 0.0;
  double krcc = 0.0;
  double plcc = 0.0;
  int n = 0;
  int skipped = 0;
  double seconds = 0.0;  // summed metric compute time
};

struct CorrelationReport {
  std::vector<MetricCorrelation> rows;  // sorted by metric name
};

struct EvaluateOptions {
  int jobs = 1;
  MetricContext context;
  std::ostream* log = nullptr;  // skip messages
};

/// Scores every record with every metric and correlates against the
/// subjective scores after flipping both to higher-is-better. Records that
/// fail to load or score are logged and skipped; more than 10 % skipped
/// raises data_integrity.
CorrelationReport evaluate(const DatasetManifest& manifest, const std::vector<std::string>& metrics,
                           const EvaluateOptions& options = {});

struct BenchRow {
  std::string metric;
  double mean_seconds = 0.0;
  double median_seconds = 0.0;
  double min_seconds = 0.0;
  int repetitions = 0;
  double srcc = 0.0;  // NaN when undefined (constant scores)
  int n = 0;
};

struct BenchReport {
  std::vector<BenchRow> rows;  // in request order
};

struct BenchOptions {
  int repetitions = 3;
  int warmup = 1;
  MetricContext context;
};

/// Single-threaded timing per image pair: `warmup` untimed calls, then
/// `repetitions` timed ones on a monotonic clock.
BenchReport bench(const DatasetManifest& manifest, const std::vector<std::string>& metrics,
                  const BenchOptions& options = {});

/// Shortest round-trip decimal, always with a decimal point or exponent.
std::string format_number(double v);

void write_correlation_csv(std::ostream& out, const CorrelationReport& report);
void write_correlation_text(std::ostream& out, const CorrelationReport& report);
void write_bench_csv(std::ostream& out, const BenchReport& report);
void write_bench_text(std::ostream& out, const BenchReport& report);

}  // namespace iqa::eval
