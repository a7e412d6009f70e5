#pragma once

#include <array>

#include "iqa/image.hpp"

namespace iqa {

/// Three planes of an opponent color space. Chroma planes are signed, so
/// these are not Images.
using ColorPlanes = std::array<Plane, 3>;

using ColorMatrix = std::array<std::array<double, 3>, 3>;

/// NTSC YIQ, as used by the FSIM/HaarPSI family.
inline constexpr ColorMatrix kRgbToYiq = {{
    {0.299, 0.587, 0.114},
    {0.596, -0.274, -0.322},
    {0.211, -0.523, 0.312},
}};

/// Opponent LMN space of VSI.
inline constexpr ColorMatrix kRgbToLmn = {{
    {0.06, 0.63, 0.27},
    {0.30, 0.04, -0.35},
    {0.34, -0.60, 0.17},
}};

/// Y = 0.299 R + 0.587 G + 0.114 B. Throws invalid_argument on 1-channel input.
Image rgb_to_luma(const Image& rgb);

ColorPlanes rgb_to_yiq(const Image& rgb);
ColorPlanes yiq_to_rgb(const ColorPlanes& yiq);
ColorPlanes rgb_to_lmn(const Image& rgb);

/// CIE L*a*b* (sRGB primaries, D65 white), L in [0, 100].
ColorPlanes rgb_to_lab(const Image& rgb);

/// Applies a 3x3 matrix per pixel.
ColorPlanes apply_color_matrix(const ColorMatrix& m, const Plane& c0, const Plane& c1,
                               const Plane& c2);

ColorMatrix invert(const ColorMatrix& m);

/// Luminance plane of any image: channel 0 for gray input, Y for RGB.
Plane luma_plane(const Image& image);

/// Replicates a gray image into three identical channels; RGB passes through.
Image as_rgb(const Image& image);

}  // namespace iqa
