#include <gtest/gtest.h>

#include <cmath>
#include <functional>

#include "iqa/color.hpp"
#include "iqa/fr_metrics.hpp"
#include "iqa/image_io.hpp"
#include "iqa/plane_ops.hpp"
#include "test_images.hpp"

namespace iqa::fr {
namespace {

constexpr int kSide = 192;

enum class Range { similarity, deviation, unbounded };

struct Entry {
  std::string name;
  std::function<FrScore(const Image&, const Image&)> fn;
  Range range;
  bool symmetric;
  bool needs_rgb = false;
};

const std::vector<Entry>& entries() {
  static const std::vector<Entry> e = {
      {"psnr", psnr, Range::unbounded, true},
      {"ssim", ssim, Range::similarity, true},
      {"ms_ssim", [](const Image& a, const Image& b) { return ms_ssim(a, b); }, Range::similarity, true},
      {"iw_ssim", [](const Image& a, const Image& b) { return iw_ssim(a, b); }, Range::similarity, false},
      {"vifp", vifp, Range::unbounded, false},
      {"gmsd", gmsd, Range::deviation, true},
      {"ms_gmsd", [](const Image& a, const Image& b) { return ms_gmsd(a, b); }, Range::deviation, true},
      {"ms_gmsdc", [](const Image& a, const Image& b) { return ms_gmsd(a, b, true); }, Range::deviation, true, true},
      {"fsim", [](const Image& a, const Image& b) { return fsim(a, b); }, Range::similarity, true},
      {"fsimc", [](const Image& a, const Image& b) { return fsim(a, b, true); }, Range::similarity, true, true},
      {"sr_sim", [](const Image& a, const Image& b) { return sr_sim(a, b); }, Range::similarity, true},
      {"sr_simc", [](const Image& a, const Image& b) { return sr_sim(a, b, true); }, Range::similarity, true, true},
      {"vsi", vsi, Range::similarity, true},
      {"mdsi", mdsi, Range::deviation, false},
      {"haarpsi", haarpsi, Range::similarity, true},
      {"dss", dss, Range::similarity, true},
  };
  return e;
}

const std::vector<Image>& images() {
  static const std::vector<Image> imgs = [] {
    std::vector<Image> v;
    v.push_back(test::natural_gray(kSide, kSide));
    v.push_back(test::natural_rgb(kSide, kSide));
    const Image coffee = load_image(test::data_path("coffee.png"));
    std::vector<Plane> crop;
    for (const Plane& p : coffee.planes()) crop.push_back(p.crop(100, 200, kSide, kSide));
    v.push_back(Image(crop));
    v.push_back(test::checkerboard(kSide, kSide, 12, 3));
    v.push_back(test::gradient_image(kSide, kSide));
    v.push_back(test::noise_image(kSide, kSide, 77, 3));
    return v;
  }();
  return imgs;
}

Image prepared(const Entry& e, const Image& img) { return e.needs_rgb ? as_rgb(img) : img; }

class FrProperty : public ::testing::TestWithParam<std::size_t> {
 protected:
  const Entry& entry() const { return entries()[GetParam()]; }
};

TEST_P(FrProperty, IdentityGivesPerfectValue) {
  for (const Image& raw : images()) {
    const Image x = prepared(entry(), raw);
    const FrScore s = entry().fn(x, x);
    EXPECT_NEAR(s.value, s.perfect_value, 1e-6) << entry().name << " channels=" << x.channels();
  }
}

TEST_P(FrProperty, RangeOnNoisyPairs) {
  const Entry& e = entry();
  for (std::size_t i = 0; i < 2; ++i) {
    const Image x = prepared(e, images()[i]);
    for (double sigma : {0.02, 0.2}) {
      const double v = e.fn(x, test::add_gaussian_noise(x, sigma, 3)).value;
      ASSERT_TRUE(std::isfinite(v)) << e.name;
      if (e.range == Range::similarity) {
        EXPECT_GE(v, 0.0) << e.name;
        EXPECT_LE(v, 1.0 + 1e-6) << e.name;
      } else if (e.range == Range::deviation) {
        EXPECT_GE(v, 0.0) << e.name;
      }
    }
  }
}

TEST_P(FrProperty, SymmetryOrWitness) {
  const Entry& e = entry();
  const Image x = prepared(e, images()[1]);
  const Image y = test::add_gaussian_noise(x, 0.1, 8);
  const double xy = e.fn(x, y).value;
  const double yx = e.fn(y, x).value;
  if (e.symmetric) {
    EXPECT_NEAR(xy, yx, 1e-6) << e.name;
  } else {
    EXPECT_GT(std::abs(xy - yx), 1e-6) << e.name << " expected a directional witness";
  }
}

INSTANTIATE_TEST_SUITE_P(AllFr, FrProperty, ::testing::Range<std::size_t>(0, 16),
                         [](const auto& info) { return entries()[info.param].name; });

TEST(FrProperties, HaarPsiMapsAreSymmetric) {
  const Plane x = test::natural_gray(32, 32).channel(0) * 255.0;
  const Plane y = test::random_plane(32, 32, 4, 0.0, 255.0);
  const HaarPsiMaps a = haarpsi_maps(x, y);
  const HaarPsiMaps b = haarpsi_maps(y, x);
  for (std::size_t m = 0; m < a.similarity.size(); ++m)
    for (std::size_t i = 0; i < a.similarity[m].size(); ++i) {
      EXPECT_NEAR(a.similarity[m].data()[i], b.similarity[m].data()[i], 1e-12);
      EXPECT_NEAR(a.weights[m].data()[i], b.weights[m].data()[i], 1e-12);
    }
}

// max(PC1, PC2) weights and the symmetric similarity kernel make FSIM
// pooling symmetric, so no directional witness exists.
TEST(FrProperties, FsimPoolingHasNoDirectionalWitness) {
  const Plane p1 = test::random_plane(12, 12, 1);
  const Plane p2 = test::random_plane(12, 12, 2);
  const Plane g1 = test::random_plane(12, 12, 3, 0.0, 200.0);
  const Plane g2 = test::random_plane(12, 12, 4, 0.0, 200.0);
  EXPECT_NEAR(fsim_pool(p1, p2, g1, g2), fsim_pool(p2, p1, g2, g1), 1e-12);
}

TEST(FrProperties, ChromaticVariantsNeutralOnReplicatedGray) {
  const Image g = test::natural_gray(kSide, kSide);
  const Image d = test::add_gaussian_noise(g, 0.05, 12);
  const Image rg = as_rgb(g);
  const Image rd = as_rgb(d);
  EXPECT_NEAR(fsim(rg, rd, true).value, fsim(g, d).value, 1e-6);
  EXPECT_NEAR(sr_sim(rg, rd, true).value, sr_sim(g, d).value, 1e-6);
}

// The MS-GMSDc blend gamma * ms + (1 - gamma) * chroma keeps the gamma factor
// even when the chroma term vanishes, so replicated gray is not neutral.
TEST(FrProperties, MsGmsdcOnReplicatedGrayKeepsBlendFactor) {
  const Image g = test::natural_gray(kSide, kSide);
  const Image d = test::add_gaussian_noise(g, 0.05, 12);
  const double ms = ms_gmsd(g, d).value;
  const double gamma = 2.0 / (1.0 + 0.32 * std::exp(-15.0 * ms)) - 1.0;
  const double c = ms_gmsd(as_rgb(g), as_rgb(d), true).value;
  EXPECT_NEAR(c, gamma * ms, 1e-12);
  EXPECT_GT(std::abs(c - ms), 1e-6);
}

TEST(FrProperties, Deterministic) {
  const Image x = images()[2];
  const Image y = test::add_gaussian_noise(x, 0.07, 2);
  for (const Entry& e : entries()) EXPECT_EQ(e.fn(x, y).value, e.fn(x, y).value) << e.name;
}

}  // namespace
}  // namespace iqa::fr
