#include "test_images.hpp"

#include <atomic>
#include <random>

#include "iqa/image_io.hpp"

namespace iqa::test {

std::filesystem::path data_path(const std::string& name) {
  return std::filesystem::path(IQA_TEST_DATA_DIR) / name;
}

namespace {

Image crop(const Image& image, int h, int w) {
  std::vector<Plane> out;
  for (const Plane& p : image.planes()) out.push_back(p.crop(0, 0, h, w));
  return Image(std::move(out));
}

}  // namespace

Image natural_gray(int h, int w) {
  static const Image camera = load_image(data_path("camera.png"));
  return crop(camera, h, w);
}

Image natural_rgb(int h, int w) {
  static const Image astronaut = load_image(data_path("astronaut.png"));
  return crop(astronaut, h, w);
}

Image constant_image(int h, int w, double value, int channels) {
  return Image(std::vector<Plane>(channels, Plane(h, w, value)));
}

Image checkerboard(int h, int w, int cell, int channels) {
  Plane p(h, w);
  for (int r = 0; r < h; ++r)
    for (int c = 0; c < w; ++c) p(r, c) = ((r / cell + c / cell) % 2) ? 1.0 : 0.0;
  return Image(std::vector<Plane>(channels, p));
}

Image gradient_image(int h, int w, int channels) {
  Plane p(h, w);
  for (int r = 0; r < h; ++r)
    for (int c = 0; c < w; ++c) p(r, c) = w > 1 ? static_cast<double>(c) / (w - 1) : 0.0;
  return Image(std::vector<Plane>(channels, p));
}

Plane random_plane(int h, int w, std::uint64_t seed, double lo, double hi) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> u(lo, hi);
  Plane p(h, w);
  for (double& v : p.data()) v = u(rng);
  return p;
}

Image noise_image(int h, int w, std::uint64_t seed, int channels) {
  std::vector<Plane> planes;
  for (int c = 0; c < channels; ++c) planes.push_back(random_plane(h, w, seed + 7919 * c));
  return Image(std::move(planes));
}

Image add_gaussian_noise(const Image& image, double sigma, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> n(0.0, sigma);
  std::vector<Plane> planes;
  for (const Plane& p : image.planes()) {
    Plane q = p;
    for (double& v : q.data()) v += n(rng);
    planes.push_back(std::move(q));
  }
  return clamp_to_image(std::move(planes));
}

TempDir::TempDir() {
  static std::atomic<int> counter{0};
  std::random_device rd;
  path_ = std::filesystem::temp_directory_path() /
          ("iqa_test_" + std::to_string(rd()) + "_" + std::to_string(counter++));
  std::filesystem::create_directories(path_);
}

TempDir::~TempDir() {
  std::error_code ec;
  std::filesystem::remove_all(path_, ec);
}

}  // namespace iqa::test
