#include <algorithm>
#include <cmath>

#include "common.hpp"
#include "iqa/filter.hpp"
#include "iqa/fr_metrics.hpp"
#include "iqa/plane_ops.hpp"

namespace iqa::fr {
namespace {

const Kernel2D& window() {
  static const Kernel2D k = Kernel2D::gaussian(11, 1.5);
  return k;
}

}  // namespace

SsimMaps ssim_maps(const Plane& x, const Plane& y, double data_range) {
  require(x.same_shape(y), ErrorKind::dimension_mismatch, "ssim: plane shapes differ");
  require(x.height() >= 11 && x.width() >= 11, ErrorKind::image_too_small,
          "ssim: planes must be at least 11x11");
  const double c1 = (0.01 * data_range) * (0.01 * data_range);
  const double c2 = (0.03 * data_range) * (0.03 * data_range);
  const Kernel2D& k = window();
  const Plane mu_x = convolve2d(x, k, Padding::valid);
  const Plane mu_y = convolve2d(y, k, Padding::valid);
  const Plane xx = convolve2d(x * x, k, Padding::valid);
  const Plane yy = convolve2d(y * y, k, Padding::valid);
  const Plane xy = convolve2d(x * y, k, Padding::valid);

  SsimMaps out{Plane(mu_x.height(), mu_x.width()), Plane(mu_x.height(), mu_x.width())};
  for (std::size_t i = 0; i < mu_x.size(); ++i) {
    const double mx = mu_x.data()[i];
    const double my = mu_y.data()[i];
    const double sxx = std::max(xx.data()[i] - mx * mx, 0.0);
    const double syy = std::max(yy.data()[i] - my * my, 0.0);
    const double sxy = xy.data()[i] - mx * my;
    const double cs = (2.0 * sxy + c2) / (sxx + syy + c2);
    out.cs.data()[i] = cs;
    out.ssim.data()[i] = (2.0 * mx * my + c1) / (mx * mx + my * my + c1) * cs;
  }
  return out;
}

FrScore ssim(const Image& ref, const Image& dist) {
  detail::check_pair(ref, dist, kSsimMinSide, "ssim");
  const int f = viewing_distance_factor(ref.height(), ref.width());
  double total = 0.0;
  for (int ch = 0; ch < ref.channels(); ++ch) {
    const auto maps = ssim_maps(avg_pool(ref.channel(ch), f), avg_pool(dist.channel(ch), f),
                                ref.data_range());
    total += mean(maps.ssim);
  }
  return {total / ref.channels(), 1.0, true};
}

FrScore ms_ssim(const Image& ref, const Image& dist, const ScaleWeights& weights) {
  const int levels = static_cast<int>(weights.size());
  const int min_side = 11 << (levels - 1);
  detail::check_pair(ref, dist, min_side, "ms_ssim");
  double total = 0.0;
  for (int ch = 0; ch < ref.channels(); ++ch) {
    Plane x = ref.channel(ch);
    Plane y = dist.channel(ch);
    double score = 1.0;
    for (int s = 0; s < levels; ++s) {
      if (s > 0) {
        x = avg_pool2(x);
        y = avg_pool2(y);
      }
      const auto maps = ssim_maps(x, y, ref.data_range());
      const double term = s + 1 < levels ? mean(maps.cs) : mean(maps.ssim);
      score *= std::pow(std::max(term, 0.0), weights[s]);
    }
    total += score;
  }
  return {total / ref.channels(), 1.0, true};
}

}  // namespace iqa::fr
