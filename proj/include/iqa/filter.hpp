#pragma once

#include <optional>
#include <vector>

#include "iqa/image.hpp"

namespace iqa {

enum class Padding {
  reflect,    // mirror without repeating the edge sample: d c b | a b c d | c b a
  replicate,  // repeat the edge sample
  zero,       // samples outside the plane are 0
  valid,      // no padding; output shrinks by kernel size - 1
};

/// Maps an out-of-range index onto [0, n) for reflect/replicate padding.
int pad_index(int index, int n, Padding padding);

/// Dense 2-D kernel with odd dimensions. Gaussian and box kernels also keep
/// their 1-D factors so convolve2d can run them separably.
class Kernel2D {
 public:
  Kernel2D(int height, int width, std::vector<double> taps, bool sum_to_one = false);

  static Kernel2D gaussian(int size, double sigma);
  static Kernel2D box(int size);
  static Kernel2D identity();
  /// Horizontal-derivative operators (respond to changes along columns).
  static Kernel2D prewitt_x();
  static Kernel2D scharr_x();
  static Kernel2D from_factors(std::vector<double> column, std::vector<double> row);

  int height() const noexcept { return height_; }
  int width() const noexcept { return width_; }
  bool sum_to_one() const noexcept { return sum_to_one_; }
  double operator()(int r, int c) const noexcept { return taps_[r * width_ + c]; }
  const std::vector<double>& taps() const noexcept { return taps_; }
  Kernel2D transposed() const;

  bool separable() const noexcept { return column_.has_value(); }
  const std::vector<double>& column_factor() const { return *column_; }
  const std::vector<double>& row_factor() const { return *row_; }

 private:
  int height_;
  int width_;
  std::vector<double> taps_;
  bool sum_to_one_;
  std::optional<std::vector<double>> column_;
  std::optional<std::vector<double>> row_;
};

/// Correlation (the kernel is not flipped): out(i,j) = sum k(u,v) in(i+u-ch, j+v-cw).
/// Same-size output for padded modes, (H-kh+1)x(W-kw+1) for valid.
Plane convolve2d(const Plane& plane, const Kernel2D& kernel, Padding padding = Padding::reflect);

/// 2x2 non-overlapping mean; a trailing odd row/column is dropped.
Plane avg_pool2(const Plane& plane);

/// factor x factor non-overlapping mean, trailing remainder dropped. factor 1 copies.
Plane avg_pool(const Plane& plane, int factor);

/// Downsampling factor max(1, round(min(H, W) / 256)) used by several
/// metrics to emulate a fixed viewing distance.
int viewing_distance_factor(int height, int width);

enum class GradientOperator { prewitt, scharr };

/// sqrt(Gx^2 + Gy^2) with the named 3x3 operator pair.
Plane gradient_magnitude(const Plane& plane, GradientOperator op,
                         Padding padding = Padding::reflect);

}  // namespace iqa
