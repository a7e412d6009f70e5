#include <algorithm>
#include <chrono>
#include <cmath>
#include <limits>
#include <numeric>

#include "iqa/error.hpp"
#include "iqa/eval.hpp"
#include "iqa/image_io.hpp"

namespace iqa::eval {

BenchReport bench(const DatasetManifest& manifest, const std::vector<std::string>& metrics,
                  const BenchOptions& options) {
  require(options.repetitions >= 3, ErrorKind::invalid_argument, "bench needs at least 3 repetitions");
  require(options.warmup >= 0, ErrorKind::invalid_argument, "warmup count must be non-negative");
  require(!metrics.empty(), ErrorKind::invalid_argument, "no metrics requested");
  std::vector<const MetricInfo*> infos;
  for (const auto& n : metrics) {
    const MetricInfo* m = find_metric(n);
    require(m != nullptr, ErrorKind::invalid_argument, "unknown metric '" + n + "'");
    infos.push_back(m);
  }

  struct Pair {
    std::optional<Image> ref;
    Image dist;
    double subjective;
  };
  std::vector<Pair> pairs;
  for (const auto& r : manifest.records) {
    pairs.push_back({r.ref ? std::optional<Image>(load_image(*r.ref)) : std::nullopt, load_image(r.dist),
                     manifest.polarity == Polarity::higher_is_better ? r.score : -r.score});
  }

  BenchReport report;
  for (const MetricInfo* info : infos) {
    BenchRow row;
    row.metric = info->name;
    row.repetitions = options.repetitions;
    std::vector<double> per_pair;
    std::vector<double> objective;
    std::vector<double> subjective;
    for (const Pair& p : pairs) {
      require(!info->needs_reference() || p.ref.has_value(), ErrorKind::invalid_argument,
              info->name + " needs reference images in the manifest");
      const Image* ref = p.ref ? &*p.ref : nullptr;
      double score = 0.0;
      for (int w = 0; w < options.warmup; ++w) score = info->compute(ref, p.dist, options.context);
      std::vector<double> times;
      for (int r = 0; r < options.repetitions; ++r) {
        const auto start = std::chrono::steady_clock::now();
        score = info->compute(ref, p.dist, options.context);
        times.push_back(std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count());
      }
      per_pair.insert(per_pair.end(), times.begin(), times.end());
      objective.push_back(info->higher_is_better ? score : -score);
      subjective.push_back(p.subjective);
    }
    std::sort(per_pair.begin(), per_pair.end());
    const std::size_t k = per_pair.size();
    row.mean_seconds = std::accumulate(per_pair.begin(), per_pair.end(), 0.0) / k;
    row.median_seconds = k % 2 ? per_pair[k / 2] : 0.5 * (per_pair[k / 2 - 1] + per_pair[k / 2]);
    row.min_seconds = per_pair.front();
    row.n = static_cast<int>(objective.size());
    try {
      row.srcc = srcc(objective, subjective);
    } catch (const Error&) {
      row.srcc = std::numeric_limits<double>::quiet_NaN();
    }
    report.rows.push_back(std::move(row));
  }
  return report;
}

}  // namespace iqa::eval
