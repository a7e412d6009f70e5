#include <algorithm>
#include <cmath>
#include <vector>

#include "common.hpp"
#include "iqa/error.hpp"
#include "iqa/filter.hpp"
#include "iqa/fr_metrics.hpp"
#include "iqa/plane_ops.hpp"
#include "iqa/transform.hpp"

namespace iqa::fr {
namespace {

constexpr int kBlock = 8;
constexpr double kSigmaWeight = 1.55;
constexpr double kWeightThreshold = 0.01;
constexpr double kPercentile = 0.05;

double mean_of_smallest(std::vector<double> values, std::size_t count) {
  std::sort(values.begin(), values.end());
  count = std::max<std::size_t>(count, 1);
  double acc = 0.0;
  for (std::size_t i = 0; i < count; ++i) acc += values[i];
  return acc / static_cast<double>(count);
}

}  // namespace

double dss_subband_similarity(const Plane& ref_band, const Plane& dist_band, bool dc) {
  require(ref_band.same_shape(dist_band) && !ref_band.empty(), ErrorKind::dimension_mismatch,
          "dss subbands differ in shape");
  const double c = dc ? 1000.0 : 300.0;
  static const Kernel2D window = Kernel2D::gaussian(3, 1.5);
  const Plane mu_x = convolve2d(ref_band, window, Padding::zero);
  const Plane mu_y = convolve2d(dist_band, window, Padding::zero);
  const Plane xx = convolve2d(ref_band * ref_band, window, Padding::zero);
  const Plane yy = convolve2d(dist_band * dist_band, window, Padding::zero);

  const std::size_t n = ref_band.size();
  std::vector<double> sxx(n), syy(n), left(n);
  for (std::size_t i = 0; i < n; ++i) {
    sxx[i] = std::max(xx.data()[i] - mu_x.data()[i] * mu_x.data()[i], 0.0);
    syy[i] = std::max(yy.data()[i] - mu_y.data()[i] * mu_y.data()[i], 0.0);
    left[i] = (2.0 * std::sqrt(sxx[i] * syy[i]) + c) / (sxx[i] + syy[i] + c);
  }
  const auto keep = static_cast<std::size_t>(std::lround(kPercentile * static_cast<double>(n)));
  double similarity = mean_of_smallest(left, keep);
  if (dc) {
    const Plane xy = convolve2d(ref_band * dist_band, window, Padding::zero);
    std::vector<double> right(n);
    for (std::size_t i = 0; i < n; ++i) {
      const double sxy = xy.data()[i] - mu_x.data()[i] * mu_y.data()[i];
      right[i] = (sxy + c) / (std::sqrt(sxx[i] * syy[i]) + c);
    }
    similarity *= mean_of_smallest(right, keep);
  }
  return similarity;
}

FrScore dss(const Image& ref, const Image& dist) {
  detail::check_pair(ref, dist, kDssMinSide, "dss");
  const BlockDct x = dct2_blocks(detail::luma(ref, 255.0), kBlock);
  const BlockDct y = dct2_blocks(detail::luma(dist, 255.0), kBlock);

  double num = 0.0;
  double den = 0.0;
  for (int m = 0; m < kBlock; ++m) {
    for (int n = 0; n < kBlock; ++n) {
      const double dm = m + 0.5;
      const double dn = n + 0.5;
      const double w = std::exp(-(dm * dm + dn * dn) / (2.0 * kSigmaWeight * kSigmaWeight));
      if (w < kWeightThreshold) continue;
      num += w * dss_subband_similarity(x.subband(m, n), y.subband(m, n), m == 0 && n == 0);
      den += w;
    }
  }
  return {num / den, 1.0, true};
}

}  // namespace iqa::fr
