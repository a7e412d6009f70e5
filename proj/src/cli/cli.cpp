#include "iqa/cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>

#include "iqa/db_metrics.hpp"
#include "iqa/error.hpp"
#include "iqa/eval.hpp"
#include "iqa/image_io.hpp"
#include "iqa/nr_metrics.hpp"

namespace iqa::cli {
namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Config {
  std::vector<std::string> metrics;
  std::string ref;
  std::string dist;
  std::string manifest;
  std::string out;
  std::string format = "csv";
  std::string model;
  std::vector<std::string> images;
  std::uint64_t seed = 0;
  int reps = 3;
  int warmup = 1;
  int jobs = 1;
  bool pretty = false;
};

std::string joined_names() {
  std::string s;
  for (const auto& n : eval::metric_names()) s += (s.empty() ? "" : ", ") + n;
  return s;
}

void check_metrics(const std::vector<std::string>& names) {
  if (names.empty()) throw UsageError("no metrics given; available: " + joined_names());
  for (const auto& n : names) {
    if (!eval::find_metric(n)) throw UsageError("unknown metric '" + n + "'; available: " + joined_names());
  }
}

bool stochastic(const std::vector<std::string>& names) {
  return std::find(names.begin(), names.end(), "kid") != names.end();
}

eval::MetricContext make_context(const Config& cfg) {
  eval::MetricContext ctx;
  ctx.db.kid.seed = cfg.seed;
  if (!cfg.model.empty()) {
    ctx.brisque_model = std::make_shared<const nr::BrisqueModel>(nr::load_brisque_model(cfg.model));
  }
  return ctx;
}

// Writes to --out when given, otherwise to `out`.
template <typename Fn>
void emit(const Config& cfg, std::ostream& out, Fn&& write) {
  if (cfg.out.empty()) {
    write(out);
    return;
  }
  std::ofstream file(cfg.out);
  require(static_cast<bool>(file), ErrorKind::unreadable_file, "cannot write " + cfg.out);
  write(file);
  require(static_cast<bool>(file), ErrorKind::unreadable_file, "write failed for " + cfg.out);
}

int cmd_compute(const Config& cfg, std::ostream& out) {
  if (cfg.metrics.size() != 1) throw UsageError("compute takes exactly one --metric");
  check_metrics(cfg.metrics);
  const eval::MetricInfo& info = *eval::find_metric(cfg.metrics.front());
  if (info.needs_reference() && cfg.ref.empty()) throw UsageError(info.name + " needs --ref");
  if (!info.needs_reference() && !cfg.ref.empty()) throw UsageError(info.name + " takes no --ref");

  const auto ctx = make_context(cfg);
  const Image dist = load_image(cfg.dist);
  std::optional<Image> ref;
  if (!cfg.ref.empty()) ref = load_image(cfg.ref);
  const double score = info.compute(ref ? &*ref : nullptr, dist, ctx);
  require(std::isfinite(score), ErrorKind::numerical, info.name + " produced a non-finite score");

  if (cfg.pretty) {
    out << info.name << " = " << eval::format_number(score) << " ("
        << (info.higher_is_better ? "higher" : "lower") << " is better)";
    if (info.name == "kid") out << ", seed " << cfg.seed;
    out << '\n';
  } else {
    out << "metric=" << info.name << " score=" << eval::format_number(score);
    if (info.name == "kid") out << " seed=" << cfg.seed;
    out << '\n';
  }
  return kExitOk;
}

int cmd_evaluate(const Config& cfg, std::ostream& out, std::ostream& err) {
  check_metrics(cfg.metrics);
  if (cfg.jobs < 1) throw UsageError("--jobs must be at least 1");
  eval::EvaluateOptions options;
  options.jobs = cfg.jobs;
  options.context = make_context(cfg);
  options.log = &err;
  const auto manifest = eval::load_manifest(cfg.manifest);
  if (stochastic(cfg.metrics)) err << "seed=" << cfg.seed << '\n';
  const auto report = eval::evaluate(manifest, cfg.metrics, options);
  emit(cfg, out, [&](std::ostream& o) {
    if (cfg.pretty || cfg.format == "text") {
      eval::write_correlation_text(o, report);
    } else {
      eval::write_correlation_csv(o, report);
    }
  });
  return kExitOk;
}

int cmd_bench(const Config& cfg, std::ostream& out, std::ostream& err) {
  check_metrics(cfg.metrics);
  if (cfg.reps < 3) throw UsageError("--reps must be at least 3");
  if (cfg.warmup < 0) throw UsageError("--warmup must be non-negative");
  if (cfg.jobs != 1) err << "bench runs single-threaded; ignoring --jobs\n";
  eval::BenchOptions options;
  options.repetitions = cfg.reps;
  options.warmup = cfg.warmup;
  options.context = make_context(cfg);
  const auto manifest = eval::load_manifest(cfg.manifest);
  if (stochastic(cfg.metrics)) err << "seed=" << cfg.seed << '\n';
  const auto report = eval::bench(manifest, cfg.metrics, options);
  emit(cfg, out, [&](std::ostream& o) {
    if (cfg.pretty || cfg.format == "text") {
      eval::write_bench_text(o, report);
    } else {
      eval::write_bench_csv(o, report);
    }
  });
  return kExitOk;
}

int cmd_features(const Config& cfg, std::ostream& out) {
  if (cfg.images.empty()) throw UsageError("features needs at least one image");
  db::FeatureMatrix all;
  for (const auto& path : cfg.images) all.append(db::raw_features(db::patchify(load_image(path))));
  db::save_fmx1(cfg.out, all);
  out << "rows=" << all.rows() << " cols=" << all.cols() << " out=" << cfg.out << '\n';
  return kExitOk;
}

int cmd_list(std::ostream& out) {
  for (const auto& m : eval::metric_registry()) {
    const char* kind = m.kind == eval::MetricKind::full_reference  ? "fr"
                       : m.kind == eval::MetricKind::no_reference ? "nr"
                                                                  : "db";
    out << m.name << ' ' << kind << ' ' << (m.higher_is_better ? "higher" : "lower") << '\n';
  }
  return kExitOk;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Config cfg;
  CLI::App app{"Image quality assessment metrics", "iqa"};
  app.require_subcommand(1);
  app.set_help_all_flag("--help-all");

  auto* compute = app.add_subcommand("compute", "Score one image or image pair");
  compute->add_option("--metric", cfg.metrics, "Metric name")->required()->expected(1);
  compute->add_option("--ref", cfg.ref, "Reference image (FR and DB metrics)");
  compute->add_option("--dist", cfg.dist, "Distorted image")->required();

  auto* evaluate = app.add_subcommand("evaluate", "Correlate metrics with subjective scores");
  evaluate->add_option("--manifest", cfg.manifest, "Manifest CSV (dist,ref,score)")->required();
  evaluate->add_option("--metric", cfg.metrics, "Metric names")->delimiter(',');
  evaluate->add_option("--jobs", cfg.jobs, "Worker threads");

  auto* bench = app.add_subcommand("bench", "Time metrics on a manifest");
  bench->add_option("--manifest", cfg.manifest, "Manifest CSV (dist,ref,score)")->required();
  bench->add_option("--metric", cfg.metrics, "Metric names")->delimiter(',');
  bench->add_option("--reps", cfg.reps, "Timed repetitions per pair (>= 3)");
  bench->add_option("--warmup", cfg.warmup, "Untimed calls per pair");
  bench->add_option("--jobs", cfg.jobs, "Ignored; bench is single-threaded");

  auto* features = app.add_subcommand("features", "Extract patch features into an FMX1 file");
  features->add_option("images", cfg.images, "Input images")->required();
  features->add_option("--out", cfg.out, "Output FMX1 file")->required();

  auto* list = app.add_subcommand("list", "List metric names");

  for (auto* sub : {compute, evaluate, bench}) {
    sub->add_option("--seed", cfg.seed, "Seed for stochastic metrics");
    sub->add_option("--model", cfg.model, "BRISQUE model file");
    sub->add_flag("--pretty", cfg.pretty, "Human-readable output");
  }
  for (auto* sub : {evaluate, bench}) {
    sub->add_option("--out", cfg.out, "Output file (default: stdout)");
    sub->add_option("--format", cfg.format, "Report format")->check(CLI::IsMember({"csv", "text"}));
  }

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*compute) return cmd_compute(cfg, out);
    if (*evaluate) return cmd_evaluate(cfg, out, err);
    if (*bench) return cmd_bench(cfg, out, err);
    if (*features) return cmd_features(cfg, out);
    if (*list) return cmd_list(out);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const Error& e) {
    err << "error (" << to_string(e.kind()) << "): " << e.what() << '\n';
    switch (e.kind()) {
      case ErrorKind::invalid_argument:
        return kExitUsage;
      case ErrorKind::numerical:
        return kExitNumerical;
      default:
        return kExitInput;
    }
  }
  return kExitUsage;
}

}  // namespace iqa::cli
