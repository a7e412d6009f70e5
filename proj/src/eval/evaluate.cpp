#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <ostream>
#include <thread>

#include "iqa/error.hpp"
#include "iqa/eval.hpp"
#include "iqa/image_io.hpp"

namespace iqa::eval {
namespace {

struct Cell {
  double score = 0.0;
  double seconds = 0.0;
  bool ok = false;
  std::string error;
};

std::vector<const MetricInfo*> resolve_metrics(const std::vector<std::string>& names) {
  require(!names.empty(), ErrorKind::invalid_argument, "no metrics requested");
  std::vector<const MetricInfo*> out;
  for (const auto& n : names) {
    const MetricInfo* m = find_metric(n);
    require(m != nullptr, ErrorKind::invalid_argument, "unknown metric '" + n + "'");
    out.push_back(m);
  }
  return out;
}

void score_record(const ManifestRecord& record, const std::vector<const MetricInfo*>& metrics,
                  const MetricContext& ctx, std::vector<Cell>& row) {
  std::optional<Image> dist;
  std::optional<Image> ref;
  try {
    dist = load_image(record.dist);
    if (record.ref) ref = load_image(*record.ref);
  } catch (const std::exception& e) {
    for (auto& cell : row) cell.error = e.what();
    return;
  }
  for (std::size_t m = 0; m < metrics.size(); ++m) {
    Cell& cell = row[m];
    if (metrics[m]->needs_reference() && !ref) {
      cell.error = "record has no reference image";
      continue;
    }
    try {
      const auto start = std::chrono::steady_clock::now();
      cell.score = metrics[m]->compute(ref ? &*ref : nullptr, *dist, ctx);
      cell.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
      if (!std::isfinite(cell.score)) {
        cell.error = "score is not finite";
        continue;
      }
      cell.ok = true;
    } catch (const std::exception& e) {
      cell.error = e.what();
    }
  }
}

}  // namespace

CorrelationReport evaluate(const DatasetManifest& manifest, const std::vector<std::string>& metrics,
                           const EvaluateOptions& options) {
  const auto infos = resolve_metrics(metrics);
  require(manifest.records.size() >= 2, ErrorKind::invalid_argument, "manifest needs at least 2 records");
  const std::size_t n_records = manifest.records.size();
  std::vector<std::vector<Cell>> cells(n_records, std::vector<Cell>(infos.size()));

  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < n_records; i = next++) {
      score_record(manifest.records[i], infos, options.context, cells[i]);
    }
  };
  const int jobs = std::clamp(options.jobs, 1, static_cast<int>(n_records));
  if (jobs == 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (int j = 0; j < jobs; ++j) pool.emplace_back(worker);
  }

  CorrelationReport report;
  for (std::size_t m = 0; m < infos.size(); ++m) {
    MetricCorrelation row;
    row.metric = infos[m]->name;
    std::vector<double> objective;
    std::vector<double> subjective;
    for (std::size_t i = 0; i < n_records; ++i) {
      const Cell& cell = cells[i][m];
      row.seconds += cell.seconds;
      if (!cell.ok) {
        ++row.skipped;
        if (options.log) {
          *options.log << "skip " << row.metric << " line " << manifest.records[i].line << ": "
                       << cell.error << '\n';
        }
        continue;
      }
      objective.push_back(infos[m]->higher_is_better ? cell.score : -cell.score);
      subjective.push_back(manifest.polarity == Polarity::higher_is_better ? manifest.records[i].score
                                                                            : -manifest.records[i].score);
    }
    if (row.skipped * 10 > static_cast<int>(n_records)) {
      fail(ErrorKind::data_integrity, row.metric + ": " + std::to_string(row.skipped) + " of " +
                                          std::to_string(n_records) + " records skipped");
    }
    row.n = static_cast<int>(objective.size());
    row.srcc = srcc(objective, subjective);
    row.krcc = krcc(objective, subjective);
    row.plcc = plcc(objective, subjective);
    report.rows.push_back(std::move(row));
  }
  std::sort(report.rows.begin(), report.rows.end(),
            [](const MetricCorrelation& a, const MetricCorrelation& b) { return a.metric < b.metric; });
  return report;
}

}  // namespace iqa::eval
