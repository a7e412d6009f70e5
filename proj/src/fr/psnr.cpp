#include <algorithm>
#include <cmath>

#include "common.hpp"
#include "iqa/fr_metrics.hpp"

namespace iqa::fr {

FrScore psnr(const Image& ref, const Image& dist) {
  detail::check_pair(ref, dist, 1, "psnr");
  const std::size_t n = ref.channel(0).size();
  double sse = 0.0;
  if (ref.channels() == 1) {
    const auto a = ref.channel(0).data();
    const auto b = dist.channel(0).data();
    for (std::size_t i = 0; i < n; ++i) sse += (a[i] - b[i]) * (a[i] - b[i]);
  } else {
    // Luma computed inline; this is the cheapest metric and stays allocation-free.
    const auto& w = kRgbToYiq[0];
    const auto r0 = ref.channel(0).data(), g0 = ref.channel(1).data(), b0 = ref.channel(2).data();
    const auto r1 = dist.channel(0).data(), g1 = dist.channel(1).data(), b1 = dist.channel(2).data();
    for (std::size_t i = 0; i < n; ++i) {
      const double y0 = w[0] * r0[i] + w[1] * g0[i] + w[2] * b0[i];
      const double y1 = w[0] * r1[i] + w[1] * g1[i] + w[2] * b1[i];
      sse += (y0 - y1) * (y0 - y1);
    }
  }
  const double mse = sse / static_cast<double>(n);
  const double range = ref.data_range();
  return {10.0 * std::log10(range * range / std::max(mse, 1e-10)), 100.0, true};
}

}  // namespace iqa::fr
