#include "iqa/color.hpp"

#include <cmath>

#include "iqa/error.hpp"

namespace iqa {
namespace {

void require_rgb(const Image& image, const char* op) {
  require(image.channels() == 3, ErrorKind::invalid_argument,
          std::string(op) + " requires a 3-channel image");
}

double srgb_to_linear(double v) {
  return v <= 0.04045 ? v / 12.92 : std::pow((v + 0.055) / 1.055, 2.4);
}

double lab_f(double t) {
  constexpr double kEpsilon = 216.0 / 24389.0;
  constexpr double kKappa = 24389.0 / 27.0;
  return t > kEpsilon ? std::cbrt(t) : (kKappa * t + 16.0) / 116.0;
}

}  // namespace

ColorPlanes apply_color_matrix(const ColorMatrix& m, const Plane& c0, const Plane& c1,
                               const Plane& c2) {
  require(c0.same_shape(c1) && c0.same_shape(c2), ErrorKind::dimension_mismatch,
          "color planes differ in shape");
  ColorPlanes out{Plane(c0.height(), c0.width()), Plane(c0.height(), c0.width()),
                  Plane(c0.height(), c0.width())};
  auto a = c0.data();
  auto b = c1.data();
  auto c = c2.data();
  for (int k = 0; k < 3; ++k) {
    auto dst = out[k].data();
    const auto& row = m[k];
    for (std::size_t i = 0; i < a.size(); ++i) dst[i] = row[0] * a[i] + row[1] * b[i] + row[2] * c[i];
  }
  return out;
}

ColorMatrix invert(const ColorMatrix& m) {
  const double det = m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) -
                     m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
                     m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
  require(std::abs(det) > 1e-12, ErrorKind::numerical, "singular color matrix");
  ColorMatrix inv{};
  inv[0][0] = (m[1][1] * m[2][2] - m[1][2] * m[2][1]) / det;
  inv[0][1] = (m[0][2] * m[2][1] - m[0][1] * m[2][2]) / det;
  inv[0][2] = (m[0][1] * m[1][2] - m[0][2] * m[1][1]) / det;
  inv[1][0] = (m[1][2] * m[2][0] - m[1][0] * m[2][2]) / det;
  inv[1][1] = (m[0][0] * m[2][2] - m[0][2] * m[2][0]) / det;
  inv[1][2] = (m[0][2] * m[1][0] - m[0][0] * m[1][2]) / det;
  inv[2][0] = (m[1][0] * m[2][1] - m[1][1] * m[2][0]) / det;
  inv[2][1] = (m[0][1] * m[2][0] - m[0][0] * m[2][1]) / det;
  inv[2][2] = (m[0][0] * m[1][1] - m[0][1] * m[1][0]) / det;
  return inv;
}

Image rgb_to_luma(const Image& rgb) {
  require_rgb(rgb, "rgb_to_luma");
  const auto& w = kRgbToYiq[0];
  Plane y(rgb.height(), rgb.width());
  auto r = rgb.channel(0).data();
  auto g = rgb.channel(1).data();
  auto b = rgb.channel(2).data();
  auto dst = y.data();
  for (std::size_t i = 0; i < dst.size(); ++i) {
    // Weights sum to 1, so results stay in range up to rounding.
    dst[i] = std::clamp(w[0] * r[i] + w[1] * g[i] + w[2] * b[i], 0.0, 1.0);
  }
  return Image::gray(std::move(y));
}

ColorPlanes rgb_to_yiq(const Image& rgb) {
  require_rgb(rgb, "rgb_to_yiq");
  return apply_color_matrix(kRgbToYiq, rgb.channel(0), rgb.channel(1), rgb.channel(2));
}

ColorPlanes yiq_to_rgb(const ColorPlanes& yiq) {
  static const ColorMatrix inverse = invert(kRgbToYiq);
  return apply_color_matrix(inverse, yiq[0], yiq[1], yiq[2]);
}

ColorPlanes rgb_to_lmn(const Image& rgb) {
  require_rgb(rgb, "rgb_to_lmn");
  return apply_color_matrix(kRgbToLmn, rgb.channel(0), rgb.channel(1), rgb.channel(2));
}

ColorPlanes rgb_to_lab(const Image& rgb) {
  require_rgb(rgb, "rgb_to_lab");
  // sRGB -> XYZ (D65), then normalised by the D65 white point.
  constexpr ColorMatrix kToXyz = {{
      {0.412453, 0.357580, 0.180423},
      {0.212671, 0.715160, 0.072169},
      {0.019334, 0.119193, 0.950227},
  }};
  constexpr double kWhite[3] = {0.950456, 1.0, 1.088754};

  const int h = rgb.height();
  const int w = rgb.width();
  ColorPlanes lab{Plane(h, w), Plane(h, w), Plane(h, w)};
  auto r = rgb.channel(0).data();
  auto g = rgb.channel(1).data();
  auto b = rgb.channel(2).data();
  for (std::size_t i = 0; i < r.size(); ++i) {
    const double lin[3] = {srgb_to_linear(r[i]), srgb_to_linear(g[i]), srgb_to_linear(b[i])};
    double f[3];
    for (int k = 0; k < 3; ++k) {
      const double xyz = kToXyz[k][0] * lin[0] + kToXyz[k][1] * lin[1] + kToXyz[k][2] * lin[2];
      f[k] = lab_f(xyz / kWhite[k]);
    }
    lab[0].data()[i] = 116.0 * f[1] - 16.0;
    lab[1].data()[i] = 500.0 * (f[0] - f[1]);
    lab[2].data()[i] = 200.0 * (f[1] - f[2]);
  }
  return lab;
}

Plane luma_plane(const Image& image) {
  if (image.channels() == 1) return image.channel(0);
  return rgb_to_yiq(image)[0];
}

Image as_rgb(const Image& image) {
  if (image.channels() == 3) return image;
  return Image::rgb(image.channel(0), image.channel(0), image.channel(0));
}

}  // namespace iqa
