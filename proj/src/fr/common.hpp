#pragma once

#include <string_view>

#include "iqa/color.hpp"
#include "iqa/image.hpp"

namespace iqa::fr::detail {

/// Shape and minimum-size preconditions shared by all FR metrics.
void check_pair(const Image& ref, const Image& dist, int min_side, std::string_view metric);

/// Luma (Y of YIQ for RGB) scaled by `scale`.
Plane luma(const Image& image, double scale = 1.0);

/// YIQ planes multiplied by `scale`; gray input yields zero chroma.
ColorPlanes yiq(const Image& image, double scale = 1.0);

/// real(z^p) for real z, i.e. |z|^p cos(p * arg z).
double real_power(double z, double p);

/// Population standard deviation.
double stddev(const Plane& p);

}  // namespace iqa::fr::detail
