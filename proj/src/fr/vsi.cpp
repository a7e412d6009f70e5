#include <algorithm>
#include <cmath>
#include <limits>

#include "common.hpp"
#include "iqa/complex_field.hpp"
#include "iqa/filter.hpp"
#include "iqa/fr_metrics.hpp"
#include "iqa/phase_congruency.hpp"
#include "iqa/plane_ops.hpp"
#include "iqa/resize.hpp"

namespace iqa::fr {
namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();
constexpr int kSaliencySide = 256;
constexpr double kOmega0 = 0.021;
constexpr double kSigmaF = 1.34;
constexpr double kSigmaD = 145.0;
constexpr double kSigmaC = 0.001;

Plane log_gabor(int n) {
  Plane lg(n, n);
  for (int r = 0; r < n; ++r) {
    for (int c = 0; c < n; ++c) {
      const double u = fft_frequency(c, n);
      const double v = fft_frequency(r, n);
      const double radius = std::sqrt(u * u + v * v);
      if (radius == 0.0 || radius * radius > 0.25) continue;
      const double l = std::log(radius / kOmega0);
      lg(r, c) = std::exp(-(l * l) / (2.0 * kSigmaF * kSigmaF));
    }
  }
  return lg;
}

Plane normalise(const Plane& p) {
  const double lo = min_value(p);
  const double hi = max_value(p);
  return map(p, [lo, hi](double v) { return (v - lo) / (hi - lo + kEps); });
}

}  // namespace

Plane sdsp_saliency(const Image& image) {
  const Image rgb = as_rgb(image);
  const int n = kSaliencySide;
  std::vector<Plane> small;
  for (int ch = 0; ch < 3; ++ch) small.push_back(resize_bilinear(rgb.channel(ch), n, n, false));
  const ColorPlanes lab = rgb_to_lab(Image(std::move(small)));

  static const Plane filter = log_gabor(kSaliencySide);
  Plane frequency(n, n);
  for (int ch = 0; ch < 3; ++ch) {
    const Plane response = ifft2(multiply(fft2(lab[ch]), filter)).real();
    frequency = frequency + response * response;
  }
  frequency = map(frequency, [](double v) { return std::sqrt(v); });

  const Plane a = normalise(lab[1]);
  const Plane b = normalise(lab[2]);
  Plane saliency(n, n);
  for (int r = 0; r < n; ++r) {
    const double dy = r - n / 2 + 1;
    for (int c = 0; c < n; ++c) {
      const double dx = c - n / 2 + 1;
      const double center = std::exp(-(dx * dx + dy * dy) / (kSigmaD * kSigmaD));
      const double chroma = a(r, c) * a(r, c) + b(r, c) * b(r, c);
      const double color = 1.0 - std::exp(-chroma / (kSigmaC * kSigmaC));
      saliency(r, c) = frequency(r, c) * center * color;
    }
  }
  return normalise(resize_bilinear(saliency, image.height(), image.width(), true));
}

VsiMaps vsi_maps(const Image& ref, const Image& dist) {
  detail::check_pair(ref, dist, kPhaseMinSide, "vsi");
  constexpr double kC1 = 1.27;
  constexpr double kC2 = 386.0;
  constexpr double kC3 = 130.0;
  constexpr double kAlpha = 0.4;
  constexpr double kBeta = 0.02;

  const Image x_rgb = as_rgb(ref);
  const Image y_rgb = as_rgb(dist);
  const int f = viewing_distance_factor(ref.height(), ref.width());
  const Plane vs_x = avg_pool(sdsp_saliency(x_rgb), f);
  const Plane vs_y = avg_pool(sdsp_saliency(y_rgb), f);
  ColorPlanes x = rgb_to_lmn(x_rgb);
  ColorPlanes y = rgb_to_lmn(y_rgb);
  if (ref.channels() == 1) {
    // The M and N rows do not sum to zero, so replicated gray would leak
    // into the chroma channels; gray input is treated as achromatic.
    for (int ch = 1; ch < 3; ++ch) {
      x[ch] = Plane(ref.height(), ref.width());
      y[ch] = Plane(ref.height(), ref.width());
    }
  }
  for (int ch = 0; ch < 3; ++ch) {
    x[ch] = avg_pool(x[ch] * 255.0, f);
    y[ch] = avg_pool(y[ch] * 255.0, f);
  }
  const Plane g_x = gradient_magnitude(x[0], GradientOperator::scharr);
  const Plane g_y = gradient_magnitude(y[0], GradientOperator::scharr);

  VsiMaps maps;
  maps.saliency_similarity = similarity_map(vs_x, vs_y, kC1);
  maps.gradient_similarity =
      map(similarity_map(g_x, g_y, kC2), [](double v) { return std::pow(v, kAlpha); });
  const Plane s_m = similarity_map(x[1], y[1], kC3);
  const Plane s_n = similarity_map(x[2], y[2], kC3);
  maps.chroma_similarity =
      zip(s_m, s_n, [](double a, double b) { return detail::real_power(a * b, kBeta); });
  maps.weight = zip(vs_x, vs_y, [](double a, double b) { return std::max(a, b); });
  return maps;
}

FrScore vsi(const Image& ref, const Image& dist) {
  const VsiMaps maps = vsi_maps(ref, dist);
  const Plane local = maps.saliency_similarity * maps.gradient_similarity * maps.chroma_similarity;
  return {weighted_mean(local, maps.weight), 1.0, true};
}

}  // namespace iqa::fr
