#include <algorithm>

#include "common.hpp"
#include "iqa/filter.hpp"
#include "iqa/fr_metrics.hpp"
#include "iqa/phase_congruency.hpp"
#include "iqa/plane_ops.hpp"

namespace iqa::fr {
namespace {

constexpr double kT1 = 0.85;
constexpr double kT2 = 160.0;
constexpr double kT3 = 200.0;
constexpr double kT4 = 200.0;
constexpr double kLambda = 0.03;

double pool(const Plane& pc_ref, const Plane& pc_dist, const Plane& grad_ref,
            const Plane& grad_dist, const Plane* chroma) {
  const Plane s_pc = similarity_map(pc_ref, pc_dist, kT1);
  const Plane s_g = similarity_map(grad_ref, grad_dist, kT2);
  const Plane weight = zip(pc_ref, pc_dist, [](double a, double b) { return std::max(a, b); });
  Plane local = s_pc * s_g;
  if (chroma != nullptr) local = local * *chroma;
  return weighted_mean(local, weight);
}

}  // namespace

double fsim_pool(const Plane& pc_ref, const Plane& pc_dist, const Plane& grad_ref,
                 const Plane& grad_dist) {
  return pool(pc_ref, pc_dist, grad_ref, grad_dist, nullptr);
}

FrScore fsim(const Image& ref, const Image& dist, bool chromatic) {
  detail::check_pair(ref, dist, kPhaseMinSide, chromatic ? "fsimc" : "fsim");
  require(!chromatic || ref.channels() == 3, ErrorKind::invalid_argument, "fsimc needs RGB input");
  const int f = viewing_distance_factor(ref.height(), ref.width());
  ColorPlanes x = detail::yiq(ref, 255.0);
  ColorPlanes y = detail::yiq(dist, 255.0);
  for (int ch = 0; ch < 3; ++ch) {
    x[ch] = avg_pool(x[ch], f);
    y[ch] = avg_pool(y[ch], f);
  }
  require(x[0].height() >= kPhaseMinSide && x[0].width() >= kPhaseMinSide,
          ErrorKind::image_too_small, "fsim: image too small after downsampling");

  const Plane pc_x = phase_congruency(x[0]).pc;
  const Plane pc_y = phase_congruency(y[0]).pc;
  const Plane g_x = gradient_magnitude(x[0], GradientOperator::scharr);
  const Plane g_y = gradient_magnitude(y[0], GradientOperator::scharr);
  if (!chromatic) return {pool(pc_x, pc_y, g_x, g_y, nullptr), 1.0, true};

  const Plane s_i = similarity_map(x[1], y[1], kT3);
  const Plane s_q = similarity_map(x[2], y[2], kT4);
  const Plane chroma = zip(s_i, s_q, [](double a, double b) {
    return detail::real_power(a * b, kLambda);
  });
  return {pool(pc_x, pc_y, g_x, g_y, &chroma), 1.0, true};
}

}  // namespace iqa::fr
