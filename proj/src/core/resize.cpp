#include "iqa/resize.hpp"

#include <algorithm>
#include <cmath>
#include <tuple>
#include <vector>

#include "iqa/error.hpp"

namespace iqa {
namespace {

double cubic(double x) {
  const double ax = std::abs(x);
  const double ax2 = ax * ax;
  const double ax3 = ax2 * ax;
  if (ax <= 1.0) return 1.5 * ax3 - 2.5 * ax2 + 1.0;
  if (ax <= 2.0) return -0.5 * ax3 + 2.5 * ax2 - 4.0 * ax + 2.0;
  return 0.0;
}

struct Contribution {
  std::vector<int> index;
  std::vector<double> weight;
};

// One output sample's taps along a single axis.
std::vector<Contribution> contributions(int in_length, int out_length, double scale) {
  const bool shrink = scale < 1.0;
  const double kernel_width = shrink ? 4.0 / scale : 4.0;
  const int taps = static_cast<int>(std::ceil(kernel_width)) + 2;
  std::vector<Contribution> out(out_length);
  for (int x = 1; x <= out_length; ++x) {
    const double u = x / scale + 0.5 * (1.0 - 1.0 / scale);
    const int left = static_cast<int>(std::floor(u - kernel_width / 2.0));
    Contribution c;
    double total = 0.0;
    for (int p = 0; p < taps; ++p) {
      const int idx = left + p;
      const double d = u - idx;
      const double w = shrink ? scale * cubic(scale * d) : cubic(d);
      c.index.push_back(idx);
      c.weight.push_back(w);
      total += w;
    }
    // Symmetric boundary: 1..n, n..1 repeated.
    const int period = 2 * in_length;
    for (std::size_t p = 0; p < c.index.size(); ++p) {
      c.weight[p] /= total;
      int m = (c.index[p] - 1) % period;
      if (m < 0) m += period;
      c.index[p] = m < in_length ? m : period - 1 - m;
    }
    out[x - 1] = std::move(c);
  }
  return out;
}

Plane resize_rows(const Plane& in, int out_height, double scale) {
  const auto contrib = contributions(in.height(), out_height, scale);
  Plane out(out_height, in.width());
  for (int r = 0; r < out_height; ++r) {
    double* dst = &out(r, 0);
    const auto& c = contrib[r];
    for (std::size_t p = 0; p < c.index.size(); ++p) {
      if (c.weight[p] == 0.0) continue;
      const double* src = &in(c.index[p], 0);
      for (int col = 0; col < in.width(); ++col) dst[col] += c.weight[p] * src[col];
    }
  }
  return out;
}

Plane resize_cols(const Plane& in, int out_width, double scale) {
  const auto contrib = contributions(in.width(), out_width, scale);
  Plane out(in.height(), out_width);
  for (int r = 0; r < in.height(); ++r) {
    const double* src = &in(r, 0);
    double* dst = &out(r, 0);
    for (int col = 0; col < out_width; ++col) {
      const auto& c = contrib[col];
      double acc = 0.0;
      for (std::size_t p = 0; p < c.index.size(); ++p) acc += c.weight[p] * src[c.index[p]];
      dst[col] = acc;
    }
  }
  return out;
}

}  // namespace

Plane resize_bicubic(const Plane& plane, int out_height, int out_width, double scale_y,
                     double scale_x) {
  require(!plane.empty() && out_height > 0 && out_width > 0, ErrorKind::invalid_argument,
          "resize needs non-empty input and output");
  // The axis with the stronger reduction goes first.
  if (scale_y <= scale_x) {
    return resize_cols(resize_rows(plane, out_height, scale_y), out_width, scale_x);
  }
  return resize_rows(resize_cols(plane, out_width, scale_x), out_height, scale_y);
}

Plane resize_bicubic(const Plane& plane, int out_height, int out_width) {
  return resize_bicubic(plane, out_height, out_width,
                        static_cast<double>(out_height) / plane.height(),
                        static_cast<double>(out_width) / plane.width());
}

Plane resize_bicubic(const Plane& plane, double scale) {
  require(scale > 0.0, ErrorKind::invalid_argument, "resize scale must be positive");
  const int oh = static_cast<int>(std::ceil(scale * plane.height()));
  const int ow = static_cast<int>(std::ceil(scale * plane.width()));
  return resize_bicubic(plane, oh, ow, scale, scale);
}

Plane resize_bilinear(const Plane& plane, int out_height, int out_width, bool align_corners) {
  require(!plane.empty() && out_height > 0 && out_width > 0, ErrorKind::invalid_argument,
          "resize needs non-empty input and output");
  auto source = [align_corners](int dst, int in_len, int out_len) {
    double src = 0.0;
    if (align_corners) {
      src = out_len > 1 ? dst * static_cast<double>(in_len - 1) / (out_len - 1) : 0.0;
    } else {
      src = (dst + 0.5) * static_cast<double>(in_len) / out_len - 0.5;
      src = std::max(src, 0.0);
    }
    const int i0 = std::min(static_cast<int>(std::floor(src)), in_len - 1);
    const int i1 = std::min(i0 + 1, in_len - 1);
    return std::tuple<int, int, double>{i0, i1, src - i0};
  };
  Plane out(out_height, out_width);
  std::vector<std::tuple<int, int, double>> cols(out_width);
  for (int c = 0; c < out_width; ++c) cols[c] = source(c, plane.width(), out_width);
  for (int r = 0; r < out_height; ++r) {
    const auto [r0, r1, fr] = source(r, plane.height(), out_height);
    for (int c = 0; c < out_width; ++c) {
      const auto [c0, c1, fc] = cols[c];
      const double top = plane(r0, c0) * (1.0 - fc) + plane(r0, c1) * fc;
      const double bottom = plane(r1, c0) * (1.0 - fc) + plane(r1, c1) * fc;
      out(r, c) = top * (1.0 - fr) + bottom * fr;
    }
  }
  return out;
}

}  // namespace iqa
