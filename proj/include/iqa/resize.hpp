#pragma once

#include "iqa/image.hpp"

namespace iqa {

/// Bicubic resampling (a = -0.5) with antialiasing on shrink and symmetric
/// boundary handling, following MATLAB's imresize. The scale factors drive
/// the kernel placement; use the overload without them for "resize to size".
Plane resize_bicubic(const Plane& plane, int out_height, int out_width, double scale_y,
                     double scale_x);
Plane resize_bicubic(const Plane& plane, int out_height, int out_width);

/// Bicubic resize by a scalar factor; output size is ceil(scale * size).
Plane resize_bicubic(const Plane& plane, double scale);

/// Bilinear resampling without antialiasing. align_corners maps the corner
/// samples onto each other; otherwise sample centres are aligned.
Plane resize_bilinear(const Plane& plane, int out_height, int out_width, bool align_corners);

}  // namespace iqa
