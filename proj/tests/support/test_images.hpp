#pragma once

#include <cstdint>
#include <filesystem>
#include <string>

#include "iqa/image.hpp"

namespace iqa::test {

std::filesystem::path data_path(const std::string& name);

/// camera.png (gray) or astronaut.png (RGB), cropped to the top-left h x w.
Image natural_gray(int h = 256, int w = 256);
Image natural_rgb(int h = 256, int w = 256);

Image constant_image(int h, int w, double value, int channels = 1);
Image checkerboard(int h, int w, int cell, int channels = 1);
/// Horizontal ramp from 0 to 1.
Image gradient_image(int h, int w, int channels = 1);
/// i.i.d. uniform samples in [0, 1].
Image noise_image(int h, int w, std::uint64_t seed, int channels = 1);

/// Adds N(0, sigma^2) noise and clamps to [0, 1].
Image add_gaussian_noise(const Image& image, double sigma, std::uint64_t seed);

Plane random_plane(int h, int w, std::uint64_t seed, double lo = 0.0, double hi = 1.0);

/// Fresh directory under the system temp dir, removed by the destructor.
class TempDir {
 public:
  TempDir();
  ~TempDir();
  TempDir(const TempDir&) = delete;
  TempDir& operator=(const TempDir&) = delete;
  const std::filesystem::path& path() const { return path_; }

 private:
  std::filesystem::path path_;
};

}  // namespace iqa::test
