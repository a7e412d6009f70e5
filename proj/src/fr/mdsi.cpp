#include <cmath>
#include <complex>
#include <numbers>

#include "common.hpp"
#include "iqa/error.hpp"
#include "iqa/filter.hpp"
#include "iqa/fr_metrics.hpp"
#include "iqa/plane_ops.hpp"

namespace iqa::fr {
namespace {

constexpr ColorMatrix kRgbToLhm = {{
    {0.2989, 0.587, 0.114},
    {0.30, 0.04, -0.35},
    {0.34, -0.60, 0.17},
}};

std::complex<double> complex_power(double z, double p) {
  const double angle = z < 0.0 ? std::numbers::pi * p : 0.0;
  return std::polar(std::pow(std::abs(z), p), angle);
}

}  // namespace

double mdsi_deviation_pool(const Plane& gcs, double q, double o) {
  require(!gcs.empty(), ErrorKind::invalid_argument, "mdsi pooling needs a non-empty map");
  std::vector<std::complex<double>> powered;
  powered.reserve(gcs.size());
  std::complex<double> total = 0.0;
  for (double v : gcs.data()) {
    powered.push_back(complex_power(v, q));
    total += powered.back();
  }
  const std::complex<double> centre = total / static_cast<double>(powered.size());
  double deviation = 0.0;
  for (const auto& z : powered) deviation += std::abs(z - centre);
  deviation /= static_cast<double>(powered.size());
  return std::pow(deviation, o);
}

FrScore mdsi(const Image& ref, const Image& dist) {
  detail::check_pair(ref, dist, kMdsiMinSide, "mdsi");
  constexpr double kC1 = 140.0;
  constexpr double kC2 = 55.0;
  constexpr double kC3 = 550.0;
  constexpr double kAlpha = 0.6;

  const int f = viewing_distance_factor(ref.height(), ref.width());
  auto prepare = [f](const Image& image) {
    const Image rgb = as_rgb(image);
    ColorPlanes out = apply_color_matrix(kRgbToLhm, rgb.channel(0), rgb.channel(1), rgb.channel(2));
    for (auto& p : out) p = avg_pool(p * 255.0, f);
    return out;
  };
  const ColorPlanes x = prepare(ref);
  const ColorPlanes y = prepare(dist);

  const Plane g_x = gradient_magnitude(x[0], GradientOperator::prewitt);
  const Plane g_y = gradient_magnitude(y[0], GradientOperator::prewitt);
  const Plane g_avg = gradient_magnitude((x[0] + y[0]) * 0.5, GradientOperator::prewitt);

  const Plane gs = similarity_map(g_x, g_y, kC1) + similarity_map(g_x, g_avg, kC2) -
                   similarity_map(g_y, g_avg, kC2);
  Plane cs(x[1].height(), x[1].width());
  for (std::size_t i = 0; i < cs.size(); ++i) {
    const double hx = x[1].data()[i], hy = y[1].data()[i];
    const double mx = x[2].data()[i], my = y[2].data()[i];
    cs.data()[i] = (2.0 * (hx * hy + mx * my) + kC3) / (hx * hx + hy * hy + mx * mx + my * my + kC3);
  }
  const Plane gcs = gs * kAlpha + cs * (1.0 - kAlpha);
  return {mdsi_deviation_pool(gcs), 0.0, false};
}

}  // namespace iqa::fr
