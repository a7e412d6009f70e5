#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "iqa/error.hpp"
#include "iqa/filter.hpp"
#include "iqa/plane_ops.hpp"
#include "iqa/resize.hpp"
#include "test_images.hpp"

namespace iqa {
namespace {

using test::random_plane;

int oracle_index(int i, int n, Padding p) {
  if (p == Padding::replicate) return std::clamp(i, 0, n - 1);
  while (i < 0 || i >= n) i = i < 0 ? -i : 2 * (n - 1) - i;
  return i;
}

// Direct quadruple loop, padding resolved per tap.
Plane naive_correlate(const Plane& in, const Kernel2D& k, Padding p) {
  const int ch = k.height() / 2;
  const int cw = k.width() / 2;
  const bool valid = p == Padding::valid;
  const int oh = valid ? in.height() - k.height() + 1 : in.height();
  const int ow = valid ? in.width() - k.width() + 1 : in.width();
  Plane out(oh, ow);
  for (int i = 0; i < oh; ++i) {
    for (int j = 0; j < ow; ++j) {
      double acc = 0.0;
      for (int u = 0; u < k.height(); ++u) {
        for (int v = 0; v < k.width(); ++v) {
          int r = valid ? i + u : i + u - ch;
          int c = valid ? j + v : j + v - cw;
          double s = 0.0;
          if (p == Padding::zero) {
            if (r >= 0 && r < in.height() && c >= 0 && c < in.width()) s = in(r, c);
          } else {
            if (!valid) {
              r = oracle_index(r, in.height(), p);
              c = oracle_index(c, in.width(), p);
            }
            s = in(r, c);
          }
          acc += k(u, v) * s;
        }
      }
      out(i, j) = acc;
    }
  }
  return out;
}

void expect_near_planes(const Plane& a, const Plane& b, double tol) {
  ASSERT_TRUE(a.same_shape(b)) << a.height() << "x" << a.width() << " vs " << b.height() << "x"
                               << b.width();
  for (std::size_t i = 0; i < a.size(); ++i) ASSERT_NEAR(a.data()[i], b.data()[i], tol) << i;
}

Kernel2D random_kernel(int h, int w, std::uint64_t seed) {
  const Plane t = random_plane(h, w, seed, -1.0, 1.0);
  return Kernel2D(h, w, {t.data().begin(), t.data().end()});
}

TEST(PadIndex, ReflectAndReplicate) {
  EXPECT_EQ(pad_index(-1, 5, Padding::reflect), 1);
  EXPECT_EQ(pad_index(-2, 5, Padding::reflect), 2);
  EXPECT_EQ(pad_index(5, 5, Padding::reflect), 3);
  EXPECT_EQ(pad_index(-3, 5, Padding::replicate), 0);
  EXPECT_EQ(pad_index(7, 5, Padding::replicate), 4);
  EXPECT_EQ(pad_index(2, 5, Padding::reflect), 2);
}

class ConvolveOracle : public ::testing::TestWithParam<Padding> {};

TEST_P(ConvolveOracle, DenseKernels) {
  const Padding p = GetParam();
  const Plane in = random_plane(16, 16, 11);
  expect_near_planes(convolve2d(in, random_kernel(5, 5, 12), p),
                     naive_correlate(in, random_kernel(5, 5, 12), p), 1e-12);
  expect_near_planes(convolve2d(in, random_kernel(3, 3, 13), p),
                     naive_correlate(in, random_kernel(3, 3, 13), p), 1e-12);
  const Plane rect = random_plane(9, 14, 14);
  expect_near_planes(convolve2d(rect, random_kernel(3, 5, 15), p),
                     naive_correlate(rect, random_kernel(3, 5, 15), p), 1e-12);
}

TEST_P(ConvolveOracle, SeparableKernels) {
  const Padding p = GetParam();
  const Plane in = random_plane(16, 13, 21);
  for (const Kernel2D& k : {Kernel2D::gaussian(7, 1.5), Kernel2D::box(3), Kernel2D::scharr_x(),
                            Kernel2D::prewitt_x().transposed()}) {
    // Re-wrapping the taps drops the separable factors and forces the dense path.
    const Kernel2D dense(k.height(), k.width(), k.taps());
    expect_near_planes(convolve2d(in, k, p), naive_correlate(in, dense, p), 1e-12);
  }
}

INSTANTIATE_TEST_SUITE_P(AllModes, ConvolveOracle,
                         ::testing::Values(Padding::reflect, Padding::replicate, Padding::zero,
                                           Padding::valid));

TEST(Convolve, IdentityKernel) {
  const Plane in = random_plane(8, 11, 3);
  for (Padding p : {Padding::reflect, Padding::zero, Padding::valid})
    expect_near_planes(convolve2d(in, Kernel2D::identity(), p), in, 0.0);
}

TEST(Convolve, BoxOnConstant) {
  const Plane in(10, 10, 0.37);
  const Plane out = convolve2d(in, Kernel2D::box(5), Padding::reflect);
  for (double v : out.data()) EXPECT_NEAR(v, 0.37, 1e-15);
  const Plane valid = convolve2d(in, Kernel2D::box(5), Padding::valid);
  EXPECT_EQ(valid.height(), 6);
  EXPECT_EQ(valid.width(), 6);
}

TEST(Convolve, IsNotFlipped) {
  Plane in(3, 3);
  in(1, 2) = 1.0;
  const Kernel2D k(1, 3, {1.0, 2.0, 3.0});
  const Plane out = convolve2d(in, k, Padding::zero);
  // out(1,1) = k(0,0)*in(1,0) + k(0,1)*in(1,1) + k(0,2)*in(1,2)
  EXPECT_DOUBLE_EQ(out(1, 1), 3.0);
  EXPECT_DOUBLE_EQ(out(1, 2), 2.0);
}

TEST(Kernel, GaussianSumsToOneAndIsSymmetric) {
  const Kernel2D g = Kernel2D::gaussian(11, 1.5);
  double total = 0.0;
  for (double t : g.taps()) total += t;
  EXPECT_NEAR(total, 1.0, 1e-12);
  for (int r = 0; r < 11; ++r)
    for (int c = 0; c < 11; ++c) EXPECT_NEAR(g(r, c), g(c, 10 - r), 1e-15);
  const double ratio = g(5, 6) / g(5, 5);
  EXPECT_NEAR(ratio, std::exp(-1.0 / (2.0 * 1.5 * 1.5)), 1e-12);
}

TEST(Kernel, RejectsEvenSizes) {
  EXPECT_THROW(Kernel2D(2, 2, {1, 1, 1, 1}), Error);
  EXPECT_THROW(Kernel2D(3, 3, {1, 1}), Error);
}

TEST(Convolve, KernelLargerThanPlaneInValidModeThrows) {
  EXPECT_THROW(convolve2d(Plane(4, 4), Kernel2D::box(5), Padding::valid), Error);
}

TEST(AvgPool, TwoByTwo) {
  const Plane in(2, 2, {1.0, 3.0, 5.0, 7.0});
  const Plane out = avg_pool2(in);
  ASSERT_EQ(out.size(), 1u);
  EXPECT_DOUBLE_EQ(out(0, 0), 4.0);
}

TEST(AvgPool, OddSizesDropTrailingSamples) {
  const Plane in = random_plane(5, 6, 8);
  const Plane out = avg_pool2(in);
  ASSERT_EQ(out.height(), 2);
  ASSERT_EQ(out.width(), 3);
  for (int r = 0; r < 2; ++r)
    for (int c = 0; c < 3; ++c) {
      const double want = (in(2 * r, 2 * c) + in(2 * r, 2 * c + 1) + in(2 * r + 1, 2 * c) +
                           in(2 * r + 1, 2 * c + 1)) / 4.0;
      EXPECT_NEAR(out(r, c), want, 1e-15);
    }
}

TEST(AvgPool, GeneralFactor) {
  const Plane in = random_plane(7, 10, 9);
  const Plane out = avg_pool(in, 3);
  ASSERT_EQ(out.height(), 2);
  ASSERT_EQ(out.width(), 3);
  double want = 0.0;
  for (int r = 3; r < 6; ++r)
    for (int c = 6; c < 9; ++c) want += in(r, c) / 9.0;
  EXPECT_NEAR(out(1, 2), want, 1e-15);
  expect_near_planes(avg_pool(in, 1), in, 0.0);
}

TEST(ViewingDistance, Factor) {
  EXPECT_EQ(viewing_distance_factor(100, 100), 1);
  EXPECT_EQ(viewing_distance_factor(384, 512), 2);
  EXPECT_EQ(viewing_distance_factor(512, 384), 2);
  EXPECT_EQ(viewing_distance_factor(1024, 800), 3);
}

class Gradient : public ::testing::TestWithParam<GradientOperator> {};

TEST_P(Gradient, ConstantIsZero) {
  const Plane g = gradient_magnitude(Plane(9, 9, 0.4), GetParam());
  for (double v : g.data()) EXPECT_NEAR(v, 0.0, 1e-15);
}

TEST_P(Gradient, RampInteriorMatchesOperatorGain) {
  // Both operators take a central difference (gain 2 per unit slope) and
  // smooth with a unit-sum profile across the edge.
  Plane ramp(12, 12);
  for (int r = 0; r < 12; ++r)
    for (int c = 0; c < 12; ++c) ramp(r, c) = 0.05 * c;
  const Plane g = gradient_magnitude(ramp, GetParam());
  for (int r = 1; r < 11; ++r)
    for (int c = 1; c < 11; ++c) EXPECT_NEAR(g(r, c), 0.1, 1e-12);
}

TEST_P(Gradient, RotationEquivariance) {
  const Plane in = random_plane(10, 10, 31);
  Plane rot(10, 10);
  for (int r = 0; r < 10; ++r)
    for (int c = 0; c < 10; ++c) rot(r, c) = in(c, 9 - r);  // 90 degrees
  const Plane g = gradient_magnitude(in, GetParam());
  const Plane gr = gradient_magnitude(rot, GetParam());
  for (int r = 0; r < 10; ++r)
    for (int c = 0; c < 10; ++c) EXPECT_NEAR(gr(r, c), g(c, 9 - r), 1e-12);
}

INSTANTIATE_TEST_SUITE_P(Operators, Gradient,
                         ::testing::Values(GradientOperator::prewitt, GradientOperator::scharr));

TEST(Resize, BicubicPreservesConstants) {
  const Plane in(17, 23, 0.6);
  const Plane down = resize_bicubic(in, 8, 11);
  const Plane up = resize_bicubic(in, 40, 50);
  for (double v : down.data()) EXPECT_NEAR(v, 0.6, 1e-12);
  for (double v : up.data()) EXPECT_NEAR(v, 0.6, 1e-12);
}

TEST(Resize, BicubicScaleSizing) {
  const Plane out = resize_bicubic(Plane(15, 16), 0.5);
  EXPECT_EQ(out.height(), 8);
  EXPECT_EQ(out.width(), 8);
}

TEST(Resize, BicubicHalvingOfLinearRamp) {
  // Symmetric antialiasing kernels reproduce linear functions away from the border.
  Plane ramp(32, 32);
  for (int r = 0; r < 32; ++r)
    for (int c = 0; c < 32; ++c) ramp(r, c) = c;
  const Plane half = resize_bicubic(ramp, 16, 16);
  for (int c = 4; c < 12; ++c) EXPECT_NEAR(half(8, c), 2.0 * c + 0.5, 1e-9);
}

TEST(Resize, BilinearAlignCorners) {
  Plane in(2, 2, {0.0, 1.0, 2.0, 3.0});
  const Plane out = resize_bilinear(in, 3, 3, true);
  EXPECT_DOUBLE_EQ(out(0, 0), 0.0);
  EXPECT_DOUBLE_EQ(out(2, 2), 3.0);
  EXPECT_DOUBLE_EQ(out(1, 1), 1.5);
  const Plane same = resize_bilinear(in, 2, 2, false);
  expect_near_planes(same, in, 0.0);
}

}  // namespace
}  // namespace iqa
