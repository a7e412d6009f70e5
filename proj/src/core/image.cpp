#include "iqa/image.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "iqa/error.hpp"

namespace iqa {

Plane::Plane(int height, int width, double fill) : height_(height), width_(width) {
  require(height >= 0 && width >= 0, ErrorKind::invalid_argument, "negative plane size");
  samples_.assign(static_cast<std::size_t>(height) * width, fill);
}

Plane::Plane(int height, int width, std::vector<double> samples)
    : height_(height), width_(width), samples_(std::move(samples)) {
  require(height >= 0 && width >= 0, ErrorKind::invalid_argument, "negative plane size");
  require(samples_.size() == static_cast<std::size_t>(height) * width,
          ErrorKind::invalid_argument, "plane data length != height * width");
}

Plane Plane::crop(int top, int left, int height, int width) const {
  require(top >= 0 && left >= 0 && height >= 0 && width >= 0 && top + height <= height_ &&
              left + width <= width_,
          ErrorKind::invalid_argument, "crop rectangle outside the plane");
  Plane out(height, width);
  for (int r = 0; r < height; ++r) {
    const double* src = &samples_[static_cast<std::size_t>(top + r) * width_ + left];
    std::copy(src, src + width, &out(r, 0));
  }
  return out;
}

Image::Image(std::vector<Plane> channels) : channels_(std::move(channels)) {
  require(channels_.size() == 1 || channels_.size() == 3, ErrorKind::invalid_argument,
          "image must have 1 or 3 channels, got " + std::to_string(channels_.size()));
  const Plane& first = channels_.front();
  require(first.height() > 0 && first.width() > 0, ErrorKind::invalid_argument,
          "image must not be empty");
  for (const Plane& p : channels_) {
    require(p.same_shape(first), ErrorKind::dimension_mismatch,
            "image channels have different shapes");
    for (double v : p.data()) {
      require(std::isfinite(v) && v >= -kRangeTolerance && v <= 1.0 + kRangeTolerance,
              ErrorKind::invalid_argument, "image sample outside [0, 1] or non-finite");
    }
  }
}

Image Image::gray(Plane plane) {
  std::vector<Plane> channels;
  channels.push_back(std::move(plane));
  return Image(std::move(channels));
}

Image Image::rgb(Plane red, Plane green, Plane blue) {
  std::vector<Plane> channels;
  channels.reserve(3);
  channels.push_back(std::move(red));
  channels.push_back(std::move(green));
  channels.push_back(std::move(blue));
  return Image(std::move(channels));
}

Image clamp_to_image(std::vector<Plane> channels) {
  for (Plane& p : channels) {
    for (double& v : p.data()) v = std::clamp(v, 0.0, 1.0);
  }
  return Image(std::move(channels));
}

}  // namespace iqa
