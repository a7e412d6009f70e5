#include <algorithm>
#include <cmath>
#include <limits>

#include "common.hpp"
#include "iqa/complex_field.hpp"
#include "iqa/filter.hpp"
#include "iqa/fr_metrics.hpp"
#include "iqa/plane_ops.hpp"
#include "iqa/resize.hpp"

namespace iqa::fr {
namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();

// 10x10 Gaussian (sigma 3.8) on an 11x11 support: the leading zero row and
// column reproduce the anchor of an even-sized kernel.
const Kernel2D& saliency_blur() {
  static const Kernel2D k = [] {
    std::vector<double> g(11, 0.0);
    double total = 0.0;
    for (int i = 0; i < 10; ++i) {
      const double x = i - 4.5;
      g[i + 1] = std::exp(-(x * x) / (2.0 * 3.8 * 3.8));
      total += g[i + 1];
    }
    for (double& v : g) v /= total;
    return Kernel2D::from_factors(g, g);
  }();
  return k;
}

Plane min_max_normalise(const Plane& p) {
  const double lo = min_value(p);
  const double hi = max_value(p);
  return map(p, [lo, hi](double v) { return (v - lo) / (hi - lo + kEps); });
}

}  // namespace

Plane spectral_residual_saliency(const Plane& luma) {
  const Plane small = resize_bicubic(luma, 0.25);
  require(small.height() >= 10 && small.width() >= 10, ErrorKind::image_too_small,
          "sr_sim: image too small for the saliency pass");
  const ComplexField spectrum = fft2(small);
  Plane log_amplitude(small.height(), small.width());
  for (std::size_t i = 0; i < spectrum.size(); ++i) {
    log_amplitude.data()[i] = std::log(std::abs(spectrum.values()[i]) + kEps);
  }
  const Plane residual =
      log_amplitude - convolve2d(log_amplitude, Kernel2D::box(3), Padding::replicate);
  ComplexField rebuilt(small.height(), small.width());
  for (std::size_t i = 0; i < spectrum.size(); ++i) {
    rebuilt.values()[i] = std::polar(std::exp(residual.data()[i]), std::arg(spectrum.values()[i]));
  }
  const ComplexField back = ifft2(rebuilt);
  Plane saliency(small.height(), small.width());
  for (std::size_t i = 0; i < back.size(); ++i) saliency.data()[i] = std::norm(back.values()[i]);
  saliency = min_max_normalise(convolve2d(saliency, saliency_blur(), Padding::zero));
  return resize_bicubic(saliency, luma.height(), luma.width());
}

FrScore sr_sim(const Image& ref, const Image& dist, bool chromatic) {
  detail::check_pair(ref, dist, kSrSimMinSide, chromatic ? "srsimc" : "srsim");
  require(!chromatic || ref.channels() == 3, ErrorKind::invalid_argument, "srsimc needs RGB input");
  constexpr double kC1 = 0.40;
  constexpr double kC2 = 225.0;
  constexpr double kAlpha = 0.5;
  constexpr double kT = 200.0;
  constexpr double kLambda = 0.03;

  const int f = viewing_distance_factor(ref.height(), ref.width());
  ColorPlanes x = detail::yiq(ref, 255.0);
  ColorPlanes y = detail::yiq(dist, 255.0);
  for (int ch = 0; ch < 3; ++ch) {
    x[ch] = avg_pool(x[ch], f);
    y[ch] = avg_pool(y[ch], f);
  }
  const Plane vs_x = spectral_residual_saliency(x[0]);
  const Plane vs_y = spectral_residual_saliency(y[0]);
  const Plane g_x = gradient_magnitude(x[0], GradientOperator::scharr);
  const Plane g_y = gradient_magnitude(y[0], GradientOperator::scharr);

  const Plane s_vs = similarity_map(vs_x, vs_y, kC1);
  const Plane s_g = map(similarity_map(g_x, g_y, kC2), [](double v) { return std::pow(v, kAlpha); });
  Plane local = s_vs * s_g;
  if (chromatic) {
    const Plane s_i = similarity_map(x[1], y[1], kT);
    const Plane s_q = similarity_map(x[2], y[2], kT);
    local = local * zip(s_i, s_q, [](double a, double b) { return detail::real_power(a * b, kLambda); });
  }
  const Plane weight = zip(vs_x, vs_y, [](double a, double b) { return std::max(a, b); });
  return {weighted_mean(local, weight), 1.0, true};
}

}  // namespace iqa::fr
