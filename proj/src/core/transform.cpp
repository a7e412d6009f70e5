#include "iqa/transform.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "iqa/error.hpp"

namespace iqa {

std::vector<HaarLevel> haar_dwt(const Plane& plane, int levels) {
  require(levels >= 1, ErrorKind::invalid_argument, "haar_dwt needs levels >= 1");
  const int need = 1 << levels;
  require(plane.height() >= need && plane.width() >= need, ErrorKind::image_too_small,
          "plane too small for " + std::to_string(levels) + " Haar levels");

  std::vector<HaarLevel> out;
  Plane current = plane;
  for (int level = 0; level < levels; ++level) {
    const int h = current.height() / 2;
    const int w = current.width() / 2;
    HaarLevel lv{Plane(h, w), Plane(h, w), Plane(h, w), Plane(h, w)};
    for (int r = 0; r < h; ++r) {
      for (int c = 0; c < w; ++c) {
        const double a = current(2 * r, 2 * c);
        const double b = current(2 * r, 2 * c + 1);
        const double cc = current(2 * r + 1, 2 * c);
        const double d = current(2 * r + 1, 2 * c + 1);
        lv.ll(r, c) = 0.5 * (a + b + cc + d);
        lv.lh(r, c) = 0.5 * (a - b + cc - d);
        lv.hl(r, c) = 0.5 * (a + b - cc - d);
        lv.hh(r, c) = 0.5 * (a - b - cc + d);
      }
    }
    current = lv.ll;
    out.push_back(std::move(lv));
  }
  return out;
}

std::vector<double> dct_matrix(int size) {
  std::vector<double> m(static_cast<std::size_t>(size) * size);
  for (int k = 0; k < size; ++k) {
    const double scale = k == 0 ? std::sqrt(1.0 / size) : std::sqrt(2.0 / size);
    for (int n = 0; n < size; ++n) {
      m[k * size + n] = scale * std::cos(std::numbers::pi * (2 * n + 1) * k / (2.0 * size));
    }
  }
  return m;
}

Plane BlockDct::subband(int m, int n) const {
  require(m >= 0 && m < block && n >= 0 && n < block, ErrorKind::invalid_argument,
          "subband index outside the block");
  Plane out(blocks_y, blocks_x);
  for (int i = 0; i < blocks_y; ++i)
    for (int j = 0; j < blocks_x; ++j) out(i, j) = coefficients(i * block + m, j * block + n);
  return out;
}

BlockDct dct2_blocks(const Plane& plane, int block) {
  require(block >= 1, ErrorKind::invalid_argument, "block size must be positive");
  require(plane.height() >= block && plane.width() >= block, ErrorKind::image_too_small,
          "plane smaller than one DCT block");
  BlockDct out;
  out.block = block;
  out.blocks_y = plane.height() / block;
  out.blocks_x = plane.width() / block;
  out.coefficients = Plane(out.blocks_y * block, out.blocks_x * block);

  const auto basis = dct_matrix(block);
  std::vector<double> tmp(static_cast<std::size_t>(block) * block);
  for (int bi = 0; bi < out.blocks_y; ++bi) {
    for (int bj = 0; bj < out.blocks_x; ++bj) {
      const int r0 = bi * block;
      const int c0 = bj * block;
      // tmp = D * X
      for (int k = 0; k < block; ++k) {
        for (int c = 0; c < block; ++c) {
          double acc = 0.0;
          for (int n = 0; n < block; ++n) acc += basis[k * block + n] * plane(r0 + n, c0 + c);
          tmp[k * block + c] = acc;
        }
      }
      // Y = tmp * D^T
      for (int k = 0; k < block; ++k) {
        for (int l = 0; l < block; ++l) {
          double acc = 0.0;
          for (int c = 0; c < block; ++c) acc += tmp[k * block + c] * basis[l * block + c];
          out.coefficients(r0 + k, c0 + l) = acc;
        }
      }
    }
  }
  return out;
}

}  // namespace iqa
