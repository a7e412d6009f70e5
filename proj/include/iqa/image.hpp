#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace iqa {

/// Row-major 2-D array of doubles. The working type of every kernel; it
/// carries no range constraint (chroma, gradients and MSCN fields live here).
class Plane {
 public:
  Plane() = default;
  Plane(int height, int width, double fill = 0.0);
  Plane(int height, int width, std::vector<double> samples);

  int height() const noexcept { return height_; }
  int width() const noexcept { return width_; }
  std::size_t size() const noexcept { return samples_.size(); }
  bool empty() const noexcept { return samples_.empty(); }

  double& operator()(int row, int col) noexcept {
    return samples_[static_cast<std::size_t>(row) * width_ + col];
  }
  const double& operator()(int row, int col) const noexcept {
    return samples_[static_cast<std::size_t>(row) * width_ + col];
  }

  std::span<double> data() noexcept { return samples_; }
  std::span<const double> data() const noexcept { return samples_; }

  bool same_shape(const Plane& other) const noexcept {
    return height_ == other.height_ && width_ == other.width_;
  }

  /// Sub-rectangle copy; the rectangle must lie inside the plane.
  Plane crop(int top, int left, int height, int width) const;

 private:
  int height_ = 0;
  int width_ = 0;
  std::vector<double> samples_;
};

/// Immutable image with 1 (gray) or 3 (RGB) channels, samples in [0, 1].
///
/// Construction validates the invariants: equal channel shapes, finite
/// samples within [-1e-6, 1 + 1e-6]. The data range is always 1.
class Image {
 public:
  static constexpr double kRangeTolerance = 1e-6;

  explicit Image(std::vector<Plane> channels);
  static Image gray(Plane plane);
  static Image rgb(Plane red, Plane green, Plane blue);

  int height() const noexcept { return channels_.front().height(); }
  int width() const noexcept { return channels_.front().width(); }
  int channels() const noexcept { return static_cast<int>(channels_.size()); }
  double data_range() const noexcept { return 1.0; }

  const Plane& channel(int index) const { return channels_.at(index); }
  const std::vector<Plane>& planes() const noexcept { return channels_; }

  bool same_shape(const Image& other) const noexcept {
    return channels() == other.channels() && height() == other.height() &&
           width() == other.width();
  }

 private:
  std::vector<Plane> channels_;
};

/// Clamps every sample into [0, 1] and builds an Image. Used for synthetic
/// distortions that may overshoot the range (additive noise).
Image clamp_to_image(std::vector<Plane> channels);

}  // namespace iqa
