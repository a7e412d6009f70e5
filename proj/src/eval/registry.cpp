#include <algorithm>

#include "iqa/error.hpp"
#include "iqa/eval.hpp"
#include "iqa/fr_metrics.hpp"

namespace iqa::eval {
namespace {


MetricInfo full_reference(std::string name, bool higher, std::function<fr::FrScore(const Image&, const Image&)> fn) {
  return {std::move(name), MetricKind::full_reference, higher,
          [fn = std::move(fn)](const Image* ref, const Image& dist, const MetricContext&) {
            require(ref != nullptr, ErrorKind::invalid_argument, "full-reference metric needs a reference");
            return fn(*ref, dist).value;
          }};
}

MetricInfo distribution(std::string name, db::DbMetric metric) {
  return {std::move(name), MetricKind::distribution, false,
          [metric](const Image* ref, const Image& dist, const MetricContext& ctx) {
            require(ref != nullptr, ErrorKind::invalid_argument, "distribution metric needs a reference");
            return db::pairwise_db(metric, *ref, dist, db::raw_features, ctx.db);
          }};
}

std::vector<MetricInfo> build() {
  std::vector<MetricInfo> m;
  m.push_back(full_reference("psnr", true, fr::psnr));
  m.push_back(full_reference("ssim", true, fr::ssim));
  m.push_back(full_reference("ms_ssim", true, [](const Image& a, const Image& b) { return fr::ms_ssim(a, b); }));
  m.push_back(full_reference("iw_ssim", true, [](const Image& a, const Image& b) { return fr::iw_ssim(a, b); }));
  m.push_back(full_reference("vifp", true, fr::vifp));
  m.push_back(full_reference("gmsd", false, fr::gmsd));
  m.push_back(full_reference("ms_gmsd", false, [](const Image& a, const Image& b) { return fr::ms_gmsd(a, b, false); }));
  m.push_back(full_reference("ms_gmsdc", false, [](const Image& a, const Image& b) { return fr::ms_gmsd(a, b, true); }));
  m.push_back(full_reference("fsim", true, [](const Image& a, const Image& b) { return fr::fsim(a, b, false); }));
  m.push_back(full_reference("fsimc", true, [](const Image& a, const Image& b) { return fr::fsim(a, b, true); }));
  m.push_back(full_reference("sr_sim", true, [](const Image& a, const Image& b) { return fr::sr_sim(a, b, false); }));
  m.push_back(full_reference("sr_simc", true, [](const Image& a, const Image& b) { return fr::sr_sim(a, b, true); }));
  m.push_back(full_reference("vsi", true, fr::vsi));
  m.push_back(full_reference("mdsi", false, fr::mdsi));
  m.push_back(full_reference("haarpsi", true, fr::haarpsi));
  m.push_back(full_reference("dss", true, fr::dss));

  m.push_back({"tv", MetricKind::no_reference, false,
               [](const Image*, const Image& dist, const MetricContext&) {
                 return nr::total_variation(dist, nr::TvNorm::anisotropic);
               }});
  m.push_back({"brisque", MetricKind::no_reference, false,
               [](const Image*, const Image& dist, const MetricContext& ctx) {
                 require(ctx.brisque_model != nullptr, ErrorKind::invalid_argument,
                         "brisque needs a model file");
                 return nr::brisque_score(nr::brisque_features(dist), *ctx.brisque_model);
               }});

  m.push_back(distribution("fid", db::DbMetric::fid));
  m.push_back(distribution("kid", db::DbMetric::kid));
  m.push_back(distribution("msid", db::DbMetric::msid));
  return m;
}

}  // namespace

const std::vector<MetricInfo>& metric_registry() {
  static const std::vector<MetricInfo> registry = build();
  return registry;
}

const MetricInfo* find_metric(std::string_view name) {
  const auto& r = metric_registry();
  const auto it = std::find_if(r.begin(), r.end(), [name](const MetricInfo& m) { return m.name == name; });
  return it == r.end() ? nullptr : &*it;
}

std::vector<std::string> metric_names() {
  std::vector<std::string> out;
  for (const auto& m : metric_registry()) out.push_back(m.name);
  return out;
}

std::vector<std::string> full_reference_metric_names() {
  std::vector<std::string> out;
  for (const auto& m : metric_registry()) {
    if (m.kind == MetricKind::full_reference) out.push_back(m.name);
  }
  return out;
}

}  // namespace iqa::eval
