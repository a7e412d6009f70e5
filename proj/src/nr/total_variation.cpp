#include <cmath>

#include "iqa/error.hpp"
#include "iqa/nr_metrics.hpp"

namespace iqa::nr {

double total_variation(const Image& image, TvNorm norm) {
  require(image.height() >= 2 && image.width() >= 2, ErrorKind::image_too_small,
          "total variation needs at least 2x2 pixels");
  const int h = image.height();
  const int w = image.width();
  double total = 0.0;
  for (const Plane& p : image.planes()) {
    double acc = 0.0;
    for (int r = 0; r < h; ++r) {
      for (int c = 0; c < w; ++c) {
        const double dx = c + 1 < w ? p(r, c + 1) - p(r, c) : 0.0;
        const double dy = r + 1 < h ? p(r + 1, c) - p(r, c) : 0.0;
        acc += norm == TvNorm::anisotropic ? std::abs(dx) + std::abs(dy) : std::hypot(dx, dy);
      }
    }
    total += acc / (static_cast<double>(h) * w);
  }
  return total / image.channels();
}

}  // namespace iqa::nr
