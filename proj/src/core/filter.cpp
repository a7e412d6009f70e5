#include "iqa/filter.hpp"

#include <cmath>
#include <numeric>
#include <string>

#include "iqa/error.hpp"

namespace iqa {
namespace {

std::vector<double> gaussian_1d(int size, double sigma) {
  std::vector<double> g(size);
  const double center = (size - 1) / 2.0;
  for (int i = 0; i < size; ++i) {
    const double x = i - center;
    g[i] = std::exp(-(x * x) / (2.0 * sigma * sigma));
  }
  const double total = std::accumulate(g.begin(), g.end(), 0.0);
  for (double& v : g) v /= total;
  return g;
}

// Extends the plane by (ph, pw) on each side; zero mode fills with 0.
Plane pad_plane(const Plane& in, int ph, int pw, Padding padding) {
  const int h = in.height();
  const int w = in.width();
  Plane out(h + 2 * ph, w + 2 * pw);
  for (int r = 0; r < out.height(); ++r) {
    const int sr = r - ph;
    const bool row_inside = sr >= 0 && sr < h;
    for (int c = 0; c < out.width(); ++c) {
      const int sc = c - pw;
      if (row_inside && sc >= 0 && sc < w) {
        out(r, c) = in(sr, sc);
      } else if (padding == Padding::zero) {
        out(r, c) = 0.0;
      } else {
        out(r, c) = in(pad_index(sr, h, padding), pad_index(sc, w, padding));
      }
    }
  }
  return out;
}

Plane correlate_valid(const Plane& in, const Kernel2D& k) {
  const int oh = in.height() - k.height() + 1;
  const int ow = in.width() - k.width() + 1;
  Plane out(oh, ow);
  if (k.separable()) {
    const auto& rowf = k.row_factor();
    const auto& colf = k.column_factor();
    Plane tmp(in.height(), ow);
    for (int r = 0; r < in.height(); ++r) {
      const double* src = &in(r, 0);
      double* dst = &tmp(r, 0);
      for (int c = 0; c < ow; ++c) {
        double acc = 0.0;
        for (int v = 0; v < k.width(); ++v) acc += rowf[v] * src[c + v];
        dst[c] = acc;
      }
    }
    for (int r = 0; r < oh; ++r) {
      double* dst = &out(r, 0);
      for (int u = 0; u < k.height(); ++u) {
        const double wgt = colf[u];
        if (wgt == 0.0) continue;
        const double* src = &tmp(r + u, 0);
        for (int c = 0; c < ow; ++c) dst[c] += wgt * src[c];
      }
    }
    return out;
  }
  for (int r = 0; r < oh; ++r) {
    double* dst = &out(r, 0);
    for (int u = 0; u < k.height(); ++u) {
      const double* src = &in(r + u, 0);
      for (int v = 0; v < k.width(); ++v) {
        const double wgt = k(u, v);
        if (wgt == 0.0) continue;
        for (int c = 0; c < ow; ++c) dst[c] += wgt * src[c + v];
      }
    }
  }
  return out;
}

}  // namespace

int pad_index(int index, int n, Padding padding) {
  if (index >= 0 && index < n) return index;
  if (padding == Padding::replicate) return index < 0 ? 0 : n - 1;
  if (n == 1) return 0;
  const int period = 2 * (n - 1);
  int i = std::abs(index) % period;
  if (i >= n) i = period - i;
  return i;
}

Kernel2D::Kernel2D(int height, int width, std::vector<double> taps, bool sum_to_one)
    : height_(height), width_(width), taps_(std::move(taps)), sum_to_one_(sum_to_one) {
  require(height > 0 && width > 0 && height % 2 == 1 && width % 2 == 1,
          ErrorKind::invalid_argument, "kernel dimensions must be odd and positive");
  require(taps_.size() == static_cast<std::size_t>(height) * width, ErrorKind::invalid_argument,
          "kernel tap count != height * width");
  if (sum_to_one_) {
    const double total = std::accumulate(taps_.begin(), taps_.end(), 0.0);
    require(std::abs(total - 1.0) <= 1e-9, ErrorKind::invalid_argument,
            "normalized kernel taps must sum to 1");
  }
}

Kernel2D Kernel2D::from_factors(std::vector<double> column, std::vector<double> row) {
  std::vector<double> taps(column.size() * row.size());
  for (std::size_t u = 0; u < column.size(); ++u)
    for (std::size_t v = 0; v < row.size(); ++v) taps[u * row.size() + v] = column[u] * row[v];
  const double total = std::accumulate(taps.begin(), taps.end(), 0.0);
  Kernel2D k(static_cast<int>(column.size()), static_cast<int>(row.size()), std::move(taps),
             std::abs(total - 1.0) <= 1e-9);
  k.column_ = std::move(column);
  k.row_ = std::move(row);
  return k;
}

Kernel2D Kernel2D::gaussian(int size, double sigma) {
  require(sigma > 0.0, ErrorKind::invalid_argument, "gaussian sigma must be positive");
  auto g = gaussian_1d(size, sigma);
  return from_factors(g, g);
}

Kernel2D Kernel2D::box(int size) {
  std::vector<double> f(size, 1.0 / size);
  return from_factors(f, f);
}

Kernel2D Kernel2D::identity() { return Kernel2D(1, 1, {1.0}, true); }

Kernel2D Kernel2D::prewitt_x() {
  return from_factors({1.0 / 3.0, 1.0 / 3.0, 1.0 / 3.0}, {-1.0, 0.0, 1.0});
}

Kernel2D Kernel2D::scharr_x() {
  return from_factors({3.0 / 16.0, 10.0 / 16.0, 3.0 / 16.0}, {-1.0, 0.0, 1.0});
}

Kernel2D Kernel2D::transposed() const {
  if (separable()) return from_factors(*row_, *column_);
  std::vector<double> t(taps_.size());
  for (int r = 0; r < height_; ++r)
    for (int c = 0; c < width_; ++c) t[c * height_ + r] = taps_[r * width_ + c];
  return Kernel2D(width_, height_, std::move(t), sum_to_one_);
}

Plane convolve2d(const Plane& plane, const Kernel2D& kernel, Padding padding) {
  if (padding == Padding::valid) {
    require(plane.height() >= kernel.height() && plane.width() >= kernel.width(),
            ErrorKind::image_too_small,
            "kernel " + std::to_string(kernel.height()) + "x" + std::to_string(kernel.width()) +
                " larger than plane in valid mode");
    return correlate_valid(plane, kernel);
  }
  require(!plane.empty(), ErrorKind::image_too_small, "convolution of an empty plane");
  const Plane padded = pad_plane(plane, kernel.height() / 2, kernel.width() / 2, padding);
  return correlate_valid(padded, kernel);
}

Plane avg_pool(const Plane& plane, int factor) {
  require(factor >= 1, ErrorKind::invalid_argument, "pooling factor must be >= 1");
  if (factor == 1) return plane;
  const int oh = plane.height() / factor;
  const int ow = plane.width() / factor;
  require(oh >= 1 && ow >= 1, ErrorKind::image_too_small, "plane smaller than pooling window");
  Plane out(oh, ow);
  const double norm = 1.0 / (factor * factor);
  for (int r = 0; r < oh; ++r) {
    for (int c = 0; c < ow; ++c) {
      double acc = 0.0;
      for (int u = 0; u < factor; ++u)
        for (int v = 0; v < factor; ++v) acc += plane(r * factor + u, c * factor + v);
      out(r, c) = acc * norm;
    }
  }
  return out;
}

Plane avg_pool2(const Plane& plane) {
  require(plane.height() >= 2 && plane.width() >= 2, ErrorKind::image_too_small,
          "avg_pool2 needs at least 2x2 input");
  return avg_pool(plane, 2);
}

int viewing_distance_factor(int height, int width) {
  const int f = static_cast<int>(std::lround(std::min(height, width) / 256.0));
  return std::max(1, f);
}

Plane gradient_magnitude(const Plane& plane, GradientOperator op, Padding padding) {
  require(plane.height() >= 3 && plane.width() >= 3, ErrorKind::image_too_small,
          "gradient_magnitude needs at least 3x3 input");
  const Kernel2D kx = op == GradientOperator::prewitt ? Kernel2D::prewitt_x() : Kernel2D::scharr_x();
  const Plane gx = convolve2d(plane, kx, padding);
  const Plane gy = convolve2d(plane, kx.transposed(), padding);
  Plane out(gx.height(), gx.width());
  auto a = gx.data();
  auto b = gy.data();
  auto d = out.data();
  for (std::size_t i = 0; i < d.size(); ++i) d[i] = std::sqrt(a[i] * a[i] + b[i] * b[i]);
  return out;
}

}  // namespace iqa
