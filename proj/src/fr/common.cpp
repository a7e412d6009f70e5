#include "common.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "iqa/error.hpp"
#include "iqa/fr_metrics.hpp"
#include "iqa/plane_ops.hpp"

namespace iqa::fr {

ScaleWeights::ScaleWeights(std::vector<double> weights) : weights_(std::move(weights)) {
  require(!weights_.empty(), ErrorKind::invalid_argument, "scale weights must not be empty");
  for (double w : weights_) {
    require(w > 0.0 && std::isfinite(w), ErrorKind::invalid_argument,
            "scale weights must be positive");
  }
}

const ScaleWeights& ms_ssim_weights() {
  static const ScaleWeights w({0.0448, 0.2856, 0.3001, 0.2363, 0.1333});
  return w;
}

const ScaleWeights& ms_gmsd_weights() {
  static const ScaleWeights w({0.096, 0.596, 0.289, 0.019});
  return w;
}

namespace detail {

void check_pair(const Image& ref, const Image& dist, int min_side, std::string_view metric) {
  require(ref.same_shape(dist), ErrorKind::dimension_mismatch,
          std::string(metric) + ": reference and distorted images differ in shape");
  require(ref.height() >= min_side && ref.width() >= min_side, ErrorKind::image_too_small,
          std::string(metric) + ": image sides must be at least " + std::to_string(min_side));
}

Plane luma(const Image& image, double scale) { return luma_plane(image) * scale; }

ColorPlanes yiq(const Image& image, double scale) {
  if (image.channels() == 1) {
    const Plane& y = image.channel(0);
    return {y * scale, Plane(y.height(), y.width()), Plane(y.height(), y.width())};
  }
  ColorPlanes out = rgb_to_yiq(image);
  for (auto& p : out) p = p * scale;
  return out;
}

double real_power(double z, double p) {
  if (z >= 0.0) return std::pow(z, p);
  return std::pow(-z, p) * std::cos(p * std::numbers::pi);
}

double stddev(const Plane& p) {
  const double m = mean(p);
  double acc = 0.0;
  for (double v : p.data()) acc += (v - m) * (v - m);
  return std::sqrt(acc / static_cast<double>(p.size()));
}

}  // namespace detail
}  // namespace iqa::fr
