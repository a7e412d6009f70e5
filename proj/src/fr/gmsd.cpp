#include <cmath>

#include "common.hpp"
#include "iqa/filter.hpp"
#include "iqa/fr_metrics.hpp"
#include "iqa/plane_ops.hpp"

namespace iqa::fr {
namespace {

// Gradient magnitude similarity with masking: alpha removes part of the
// cross term from numerator and denominator alike.
Plane masked_similarity(const Plane& a, const Plane& b, double c, double alpha) {
  return zip(a, b, [c, alpha](double x, double y) {
    return (2.0 * x * y - alpha * x * y + c) / (x * x + y * y - alpha * x * y + c);
  });
}

double deviation(const Plane& x, const Plane& y, double c, double alpha) {
  const Plane gx = gradient_magnitude(x, GradientOperator::prewitt);
  const Plane gy = gradient_magnitude(y, GradientOperator::prewitt);
  return detail::stddev(masked_similarity(gx, gy, c, alpha));
}

}  // namespace

FrScore gmsd(const Image& ref, const Image& dist) {
  detail::check_pair(ref, dist, kGmsdMinSide, "gmsd");
  constexpr double kC = 170.0 / (255.0 * 255.0);
  const Plane x = avg_pool2(detail::luma(ref));
  const Plane y = avg_pool2(detail::luma(dist));
  return {deviation(x, y, kC, 0.0), 0.0, false};
}

FrScore ms_gmsd(const Image& ref, const Image& dist, bool chromatic) {
  detail::check_pair(ref, dist, kMsGmsdMinSide, "ms_gmsd");
  require(!chromatic || ref.channels() == 3, ErrorKind::invalid_argument,
          "ms_gmsdc needs RGB input");
  constexpr double kC = 170.0;
  constexpr double kAlpha = 0.5;
  const auto& weights = ms_gmsd_weights();
  ColorPlanes x = detail::yiq(ref, 255.0);
  ColorPlanes y = detail::yiq(dist, 255.0);
  double acc = 0.0;
  for (std::size_t s = 0; s < weights.size(); ++s) {
    if (s > 0) {
      for (int ch = 0; ch < 3; ++ch) {
        x[ch] = avg_pool2(x[ch]);
        y[ch] = avg_pool2(y[ch]);
      }
    }
    const double d = deviation(x[0], y[0], kC, kAlpha);
    acc += weights[s] * d * d;
  }
  const double ms = std::sqrt(acc);
  if (!chromatic) return {ms, 0.0, false};

  double chroma = 0.0;
  for (int ch = 1; ch < 3; ++ch) {
    const Plane d = x[ch] - y[ch];
    chroma += mean(d * d);
  }
  const double rmse = std::sqrt(chroma);
  const double gamma = 2.0 / (1.0 + 0.32 * std::exp(-15.0 * ms)) - 1.0;
  return {gamma * ms + (1.0 - gamma) * 0.01 * rmse, 0.0, false};
}

}  // namespace iqa::fr
