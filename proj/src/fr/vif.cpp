#include <algorithm>
#include <cmath>

#include "common.hpp"
#include "iqa/filter.hpp"
#include "iqa/fr_metrics.hpp"
#include "iqa/plane_ops.hpp"

namespace iqa::fr {

FrScore vifp(const Image& ref, const Image& dist) {
  detail::check_pair(ref, dist, kVifpMinSide, "vifp");
  constexpr double kNoise = 2.0;
  constexpr double kEps = 1e-8;
  Plane x = detail::luma(ref, 255.0);
  Plane y = detail::luma(dist, 255.0);
  double num = 0.0;
  double den = 0.0;
  for (int scale = 0; scale < 4; ++scale) {
    const int size = (1 << (4 - scale)) + 1;
    const Kernel2D k = Kernel2D::gaussian(size, size / 5.0);
    if (scale > 0) {
      auto decimate = [&k](const Plane& p) {
        const Plane f = convolve2d(p, k, Padding::valid);
        Plane out((f.height() + 1) / 2, (f.width() + 1) / 2);
        for (int r = 0; r < out.height(); ++r)
          for (int c = 0; c < out.width(); ++c) out(r, c) = f(2 * r, 2 * c);
        return out;
      };
      x = decimate(x);
      y = decimate(y);
    }
    const Plane mu_x = convolve2d(x, k, Padding::valid);
    const Plane mu_y = convolve2d(y, k, Padding::valid);
    const Plane xx = convolve2d(x * x, k, Padding::valid);
    const Plane yy = convolve2d(y * y, k, Padding::valid);
    const Plane xy = convolve2d(x * y, k, Padding::valid);
    for (std::size_t i = 0; i < mu_x.size(); ++i) {
      const double mx = mu_x.data()[i];
      const double my = mu_y.data()[i];
      double sxx = std::max(xx.data()[i] - mx * mx, 0.0);
      const double syy = std::max(yy.data()[i] - my * my, 0.0);
      const double sxy = xy.data()[i] - mx * my;

      double g = sxy / (sxx + kEps);
      double sv = syy - g * sxy;
      if (sxx <= kEps) {
        g = 0.0;
        sv = syy;
        sxx = 0.0;
      }
      if (syy <= kEps) {
        g = 0.0;
        sv = 0.0;
      }
      if (g < 0.0) {
        sv = syy;
        g = 0.0;
      }
      sv = std::max(sv, kEps);
      num += std::log10(1.0 + g * g * sxx / (sv + kNoise));
      den += std::log10(1.0 + sxx / kNoise);
    }
  }
  return {(num + kEps) / (den + kEps), 1.0, true};
}

}  // namespace iqa::fr
