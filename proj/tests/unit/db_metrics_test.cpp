#include <gtest/gtest.h>

#include <Eigen/Dense>
#include <cmath>
#include <fstream>
#include <numbers>
#include <numeric>
#include <functional>
#include <random>
#include <sstream>

#include "iqa/db_metrics.hpp"
#include "iqa/error.hpp"
#include "iqa/filter.hpp"
#include "iqa/plane_ops.hpp"
#include "test_images.hpp"

namespace iqa::db {
namespace {

ErrorKind kind_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  ADD_FAILURE() << "no iqa::Error thrown";
  return ErrorKind::invalid_argument;
}

FeatureMatrix gaussian_rows(int n, int d, std::uint64_t seed, double shift = 0.0, double scale = 1.0) {
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> normal(0.0, 1.0);
  FeatureMatrix m(n, d);
  for (int r = 0; r < n; ++r)
    for (int c = 0; c < d; ++c) m(r, c) = shift + scale * normal(rng) * (1.0 + 0.3 * c);
  return m;
}

// ---- FeatureMatrix and files ----

TEST(FeatureMatrix, RejectsNonFinite) {
  EXPECT_THROW(FeatureMatrix(1, 2, {1.0, std::nan("")}), Error);
  EXPECT_THROW(FeatureMatrix(2, 2, {1.0, 2.0, 3.0}), Error);
}

TEST(FeatureMatrix, AppendAndSelect) {
  FeatureMatrix a(1, 2, {1, 2});
  a.append(FeatureMatrix(2, 2, {3, 4, 5, 6}));
  EXPECT_EQ(a.rows(), 3);
  const FeatureMatrix s = a.select_rows({2, 0});
  EXPECT_EQ(s(0, 1), 6.0);
  EXPECT_EQ(s(1, 0), 1.0);
  EXPECT_THROW(a.append(FeatureMatrix(1, 3)), Error);
}

TEST(FeatureFiles, Fmx1RoundTripAndLayout) {
  const FeatureMatrix m(2, 3, {0.5, -1.25, 3.0, 1e-3, 7.0, -0.0});
  std::stringstream ss;
  write_fmx1(ss, m);
  const std::string bytes = ss.str();
  ASSERT_EQ(bytes.size(), 4u + 8u + 6u * 4u);
  EXPECT_EQ(bytes.substr(0, 4), "FMX1");
  EXPECT_EQ(static_cast<unsigned char>(bytes[4]), 2);  // little-endian N
  EXPECT_EQ(static_cast<unsigned char>(bytes[8]), 3);
  const FeatureMatrix back = read_fmx1(ss);
  ASSERT_EQ(back.rows(), 2);
  ASSERT_EQ(back.cols(), 3);
  for (int i = 0; i < 6; ++i)
    EXPECT_EQ(back.values()[i], static_cast<double>(static_cast<float>(m.values()[i])));
}

TEST(FeatureFiles, TruncatedFmx1) {
  const FeatureMatrix m(2, 2, {1, 2, 3, 4});
  std::stringstream ss;
  write_fmx1(ss, m);
  std::string bytes = ss.str();
  bytes.pop_back();
  std::istringstream in(bytes);
  EXPECT_EQ(kind_of([&] { read_fmx1(in); }), ErrorKind::unreadable_file);
}

TEST(FeatureFiles, CsvWithAndWithoutHeader) {
  std::istringstream with("a,b\n1,2\n3.5,-4e-1\n");
  const FeatureMatrix m = read_feature_csv(with);
  EXPECT_EQ(m.rows(), 2);
  EXPECT_DOUBLE_EQ(m(1, 1), -0.4);
  std::istringstream without("1,2\n3,4\n");
  EXPECT_EQ(read_feature_csv(without).rows(), 2);
  std::istringstream ragged("1,2\n3\n");
  EXPECT_EQ(kind_of([&] { read_feature_csv(ragged); }), ErrorKind::parse_error);
  std::istringstream text("1,2\nx,4\n");
  EXPECT_EQ(kind_of([&] { read_feature_csv(text); }), ErrorKind::parse_error);
}

TEST(FeatureFiles, LoadDetectsFormat) {
  test::TempDir dir;
  const FeatureMatrix m(2, 2, {1, 2, 3, 4});
  save_fmx1(dir.path() / "m.fmx", m);
  {
    std::ofstream out(dir.path() / "m.csv");
    write_feature_csv(out, m);
  }
  EXPECT_EQ(load_feature_matrix(dir.path() / "m.fmx")(1, 0), 3.0);
  EXPECT_EQ(load_feature_matrix(dir.path() / "m.csv")(1, 1), 4.0);
  EXPECT_EQ(kind_of([&] { load_feature_matrix(dir.path() / "missing.fmx"); }),
            ErrorKind::unreadable_file);
}

// ---- patches and raw features ----

TEST(Patchify, EnumerationOracle) {
  EXPECT_EQ(patchify(test::natural_gray(96, 96)).patches.size(), 1u);
  EXPECT_EQ(patchify(test::natural_gray(128, 128)).patches.size(), 4u);
  const PatchSet tall = patchify(test::natural_gray(160, 96));
  ASSERT_EQ(tall.patches.size(), 3u);
  EXPECT_EQ(tall.offsets[2], (std::pair{64, 0}));
  // 150: stride grid {0, 32}, border anchor at 54.
  EXPECT_EQ(patch_offsets(150), (std::vector<int>{0, 32, 54}));
  for (int len = 96; len < 300; ++len) {
    const auto o = patch_offsets(len);
    EXPECT_EQ(o.front(), 0);
    EXPECT_EQ(o.back(), len - 96);
    for (std::size_t i = 0; i + 1 < o.size(); ++i) EXPECT_LE(o[i + 1] - o[i], 32);
  }
  EXPECT_EQ(kind_of([] { patchify(test::natural_gray(95, 200)); }), ErrorKind::image_too_small);
}

TEST(Patchify, PatchesAreCrops) {
  const Image img = test::natural_rgb(128, 160);
  const PatchSet set = patchify(img);
  for (std::size_t i = 0; i < set.patches.size(); ++i) {
    const auto [top, left] = set.offsets[i];
    ASSERT_EQ(set.patches[i].height(), 96);
    EXPECT_EQ(set.patches[i].channel(2)(5, 7), img.channel(2)(top + 5, left + 7));
  }
}

TEST(RawFeatures, ConstantPatch) {
  const auto f = raw_patch_features(test::constant_image(96, 96, 0.3));
  ASSERT_EQ(f.size(), 68u);
  for (int i = 0; i < 64; ++i) EXPECT_NEAR(f[i], 0.3, 1e-15);
  for (int i = 64; i < 68; ++i) EXPECT_EQ(f[i], 0.0);
}

TEST(RawFeatures, DirectRecomputation) {
  const Image patch = test::noise_image(96, 96, 3);
  const Plane& x = patch.channel(0);
  const auto f = raw_patch_features(patch);
  const Plane means = avg_pool(x, 12);
  for (int i = 0; i < 64; ++i) EXPECT_NEAR(f[i], means(i / 8, i % 8), 1e-12);
  double bins[4] = {};
  for (int r = 0; r < 95; ++r)
    for (int c = 0; c < 95; ++c) {
      const double dx = x(r, c + 1) - x(r, c);
      const double dy = x(r + 1, c) - x(r, c);
      if (dx == 0 && dy == 0) continue;
      double deg = std::atan2(dy, dx) * 180.0 / std::numbers::pi;
      if (deg < 0) deg += 180.0;
      bins[static_cast<int>(deg / 45.0) % 4] += std::sqrt(dx * dx + dy * dy);
    }
  for (int b = 0; b < 4; ++b) EXPECT_NEAR(f[64 + b], bins[b] / (96.0 * 96.0), 1e-12);
}

TEST(RawFeatures, IdenticalSetsGiveIdenticalMatrices) {
  const PatchSet set = patchify(test::natural_rgb(128, 128));
  const FeatureMatrix a = raw_features(set);
  const FeatureMatrix b = raw_features(set);
  EXPECT_EQ(a.rows(), 4);
  EXPECT_EQ(a.cols(), 68);
  EXPECT_TRUE(std::equal(a.values().begin(), a.values().end(), b.values().begin()));
}

// ---- Gaussian summary and FID ----

TEST(GaussianSummary, HandComputed) {
  const GaussianSummary s = gaussian_summary(FeatureMatrix(2, 2, {0, 0, 2, 2}));
  EXPECT_DOUBLE_EQ(s.mean[0], 1.0);
  EXPECT_DOUBLE_EQ(s.mean[1], 1.0);
  for (double v : s.covariance) EXPECT_DOUBLE_EQ(v, 2.0);
  const GaussianSummary z = gaussian_summary(FeatureMatrix(3, 2, {1, 5, 1, 5, 1, 5}));
  for (double v : z.covariance) EXPECT_EQ(v, 0.0);
  EXPECT_EQ(kind_of([] { gaussian_summary(FeatureMatrix(1, 2, {1, 2})); }),
            ErrorKind::invalid_argument);
}

TEST(GaussianSummary, TwoPassOracle) {
  const FeatureMatrix f = gaussian_rows(50, 3, 7, 100.0);
  const GaussianSummary s = gaussian_summary(f);
  for (int j = 0; j < 3; ++j) {
    double m = 0.0;
    for (int r = 0; r < 50; ++r) m += f(r, j);
    m /= 50;
    EXPECT_NEAR(s.mean[j], m, 1e-10);
  }
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      double c = 0.0;
      for (int r = 0; r < 50; ++r) c += (f(r, i) - s.mean[i]) * (f(r, j) - s.mean[j]);
      EXPECT_NEAR(s.cov(i, j), c / 49.0, 1e-10);
      EXPECT_EQ(s.cov(i, j), s.cov(j, i));
    }
}

GaussianSummary summary(std::vector<double> mean, std::vector<double> cov) {
  GaussianSummary s;
  s.dim = static_cast<int>(mean.size());
  s.mean = std::move(mean);
  s.covariance = std::move(cov);
  return s;
}

TEST(Fid, ScalarClosedForm) {
  EXPECT_NEAR(fid(summary({0.0}, {1.0}), summary({1.0}, {4.0})), 2.0, 1e-12);
}

TEST(Fid, DiagonalClosedForm) {
  const std::vector<double> ma{1, -2, 0.5}, mb{0, 1, 2};
  const std::vector<double> da{1.0, 0.25, 9.0}, db{4.0, 1.0, 0.5};
  double want = 0.0;
  for (int i = 0; i < 3; ++i)
    want += (ma[i] - mb[i]) * (ma[i] - mb[i]) + (std::sqrt(da[i]) - std::sqrt(db[i])) * (std::sqrt(da[i]) - std::sqrt(db[i]));
  auto diag = [](const std::vector<double>& d) {
    std::vector<double> c(9, 0.0);
    for (int i = 0; i < 3; ++i) c[i * 4] = d[i];
    return c;
  };
  EXPECT_NEAR(fid(summary(ma, diag(da)), summary(mb, diag(db))), want, 1e-10);
}

TEST(Fid, IdentitySymmetryAndRotation) {
  const FeatureMatrix a = gaussian_rows(80, 5, 1);
  const FeatureMatrix b = gaussian_rows(60, 5, 2, 0.4, 1.3);
  EXPECT_NEAR(fid(a, a), 0.0, 1e-8);
  const double ab = fid(a, b);
  EXPECT_GT(ab, 0.0);
  EXPECT_NEAR(fid(b, a), ab, 1e-8);

  std::mt19937_64 rng(3);
  std::normal_distribution<double> normal;
  Eigen::MatrixXd g(5, 5);
  for (int i = 0; i < 25; ++i) g.data()[i] = normal(rng);
  const Eigen::MatrixXd q = Eigen::HouseholderQR<Eigen::MatrixXd>(g).householderQ();
  auto rotate = [&](const FeatureMatrix& m) {
    FeatureMatrix out(m.rows(), m.cols());
    for (int r = 0; r < m.rows(); ++r)
      for (int i = 0; i < 5; ++i) {
        double acc = 0.0;
        for (int j = 0; j < 5; ++j) acc += q(i, j) * m(r, j);
        out(r, i) = acc;
      }
    return out;
  };
  EXPECT_NEAR(fid(rotate(a), rotate(b)), ab, 1e-6);
}

TEST(Fid, DimensionMismatch) {
  EXPECT_EQ(kind_of([] { fid(summary({0.0}, {1.0}), summary({0.0, 0.0}, {1, 0, 0, 1})); }),
            ErrorKind::dimension_mismatch);
}

// ---- KID ----

double mmd_oracle(const FeatureMatrix& x, const FeatureMatrix& y) {
  auto k = [](std::span<const double> a, std::span<const double> b) {
    double dot = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) dot += a[i] * b[i];
    return std::pow(dot / a.size() + 1.0, 3);
  };
  const double m = x.rows(), n = y.rows();
  double xx = 0.0, yy = 0.0, xy = 0.0;
  for (int i = 0; i < x.rows(); ++i)
    for (int j = 0; j < x.rows(); ++j)
      if (i != j) xx += k(x.row(i), x.row(j));
  for (int i = 0; i < y.rows(); ++i)
    for (int j = 0; j < y.rows(); ++j)
      if (i != j) yy += k(y.row(i), y.row(j));
  for (int i = 0; i < x.rows(); ++i)
    for (int j = 0; j < y.rows(); ++j) xy += k(x.row(i), y.row(j));
  return xx / (m * (m - 1)) + yy / (n * (n - 1)) - 2.0 * xy / (m * n);
}

TEST(Kid, HandExpandedThreeByThree) {
  // x = {0, 1, 2}, y = {0, 0, 1} in one dimension, k(a, b) = (ab + 1)^3:
  // XX = 58/6, YY = 6/6, XY = 42 * 2/9, so MMD^2 = 29/3 + 1 - 28/3 = 4/3.
  const FeatureMatrix x(3, 1, {0, 1, 2});
  const FeatureMatrix y(3, 1, {0, 0, 1});
  EXPECT_NEAR(mmd2_unbiased(x, y), 4.0 / 3.0, 1e-12);
  const KidResult r = kid(x, y, {.subsets = 1, .subset_size = 3, .seed = 5});
  EXPECT_NEAR(r.mean, 4.0 / 3.0, 1e-12);
}

TEST(Kid, DoubleSumOracle) {
  const FeatureMatrix a = gaussian_rows(20, 4, 8);
  const FeatureMatrix b = gaussian_rows(20, 4, 9, 0.5);
  EXPECT_NEAR(mmd2_unbiased(a, b), mmd_oracle(a, b), 1e-10);
  const double self = mmd2_unbiased(a, a);
  EXPECT_NEAR(self, mmd_oracle(a, a), 1e-10);
  double kmax = 0.0;
  for (int i = 0; i < a.rows(); ++i) kmax = std::max(kmax, polynomial_kernel(a.row(i), a.row(i)));
  EXPECT_GE(self, -2.0 * kmax / (a.rows() - 1));
  EXPECT_NEAR(kid(a, a, {.subsets = 1, .subset_size = 20}).mean, self, 1e-10);
  EXPECT_EQ(kind_of([&] { mmd2_unbiased(a, gaussian_rows(21, 4, 9)); }), ErrorKind::invalid_argument);
}

TEST(Kid, SameDistributionIsNearZero) {
  const FeatureMatrix a = gaussian_rows(400, 6, 10);
  const FeatureMatrix b = gaussian_rows(400, 6, 11);
  const KidResult r = kid(a, b, {.subsets = 50, .subset_size = 100, .seed = 1});
  EXPECT_LE(std::abs(r.mean), 3.0 * r.stddev);
  const KidResult far = kid(a, gaussian_rows(400, 6, 12, 1.0), {.subsets = 50, .subset_size = 100});
  EXPECT_GT(far.mean, 3.0 * far.stddev);
}

TEST(Kid, DeterministicAndPermutationInvariant) {
  const FeatureMatrix a = gaussian_rows(50, 3, 13);
  const FeatureMatrix b = gaussian_rows(40, 3, 14, 0.2);
  const KidOptions opt{.subsets = 1, .subset_size = 40, .seed = 9};
  EXPECT_EQ(kid(a, b, opt).mean, kid(a, b, opt).mean);
  std::vector<int> perm(50);
  std::iota(perm.begin(), perm.end(), 0);
  std::reverse(perm.begin(), perm.end());
  // Full-size subsets see every row, so only the order changes.
  const KidOptions full{.subsets = 1, .subset_size = 40, .seed = 9};
  std::vector<int> pb(40);
  std::iota(pb.begin(), pb.end(), 0);
  std::shuffle(pb.begin(), pb.end(), std::mt19937_64(4));
  const FeatureMatrix a40 = a.select_rows(std::vector<int>(perm.begin(), perm.begin() + 40));
  EXPECT_NEAR(kid(a40, b, full).mean, kid(a40.select_rows(pb), b.select_rows(pb), full).mean, 1e-10);
  EXPECT_EQ(kind_of([&] { kid(a, b, {.subsets = 1, .subset_size = 41}); }),
            ErrorKind::invalid_argument);
}

// ---- Inception score ----

TEST(InceptionScore, Extremes) {
  FeatureMatrix same(5, 3);
  for (int r = 0; r < 5; ++r) {
    same(r, 0) = 0.2;
    same(r, 1) = 0.5;
    same(r, 2) = 0.3;
  }
  EXPECT_NEAR(inception_score(same), 1.0, 1e-12);
  FeatureMatrix onehot(4, 4);
  for (int i = 0; i < 4; ++i) onehot(i, i) = 1.0;
  EXPECT_NEAR(inception_score(onehot), 4.0, 1e-12);
}

TEST(InceptionScore, KlOracleAndRange) {
  std::mt19937_64 rng(15);
  std::uniform_real_distribution<double> u(0.01, 1.0);
  FeatureMatrix p(12, 5);
  for (int r = 0; r < 12; ++r) {
    double s = 0.0;
    for (int c = 0; c < 5; ++c) s += p(r, c) = u(rng);
    for (int c = 0; c < 5; ++c) p(r, c) /= s;
  }
  std::vector<double> marginal(5, 0.0);
  for (int r = 0; r < 12; ++r)
    for (int c = 0; c < 5; ++c) marginal[c] += p(r, c) / 12;
  double kl = 0.0;
  for (int r = 0; r < 12; ++r)
    for (int c = 0; c < 5; ++c) kl += p(r, c) * std::log(p(r, c) / marginal[c]) / 12;
  const double is = inception_score(p);
  EXPECT_NEAR(is, std::exp(kl), 1e-12);
  EXPECT_GE(is, 1.0);
  EXPECT_LE(is, 5.0);
  EXPECT_GE(inception_score(p, 3), 1.0);
}

TEST(InceptionScore, RejectsUnnormalisedRows) {
  EXPECT_EQ(kind_of([] { inception_score(FeatureMatrix(2, 2, {0.5, 0.6, 0.5, 0.5})); }),
            ErrorKind::invalid_argument);
  EXPECT_EQ(kind_of([] { inception_score(FeatureMatrix(2, 2, {1.5, -0.5, 0.5, 0.5})); }),
            ErrorKind::invalid_argument);
}

// ---- MSID ----

std::vector<double> taylor_heat_trace(const std::vector<double>& adj, int n, double t) {
  Eigen::MatrixXd a = Eigen::Map<const Eigen::MatrixXd>(adj.data(), n, n);
  Eigen::VectorXd deg = a.rowwise().sum();
  Eigen::MatrixXd l = Eigen::MatrixXd::Zero(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (deg(i) == 0.0 || deg(j) == 0.0) continue;
      l(i, j) = (i == j ? 1.0 : 0.0) - a(i, j) / std::sqrt(deg(i) * deg(j));
    }
  // Scaling and squaring keeps the series well conditioned.
  const int squarings = 6;
  const Eigen::MatrixXd m = -t / std::pow(2.0, squarings) * l;
  Eigen::MatrixXd term = Eigen::MatrixXd::Identity(n, n);
  Eigen::MatrixXd e = term;
  for (int k = 1; k < 30; ++k) {
    term = term * m / k;
    e += term;
  }
  for (int s = 0; s < squarings; ++s) e = e * e;
  return {e.trace() / n};
}

TEST(Msid, HeatTraceMatchesTaylorExpm) {
  std::mt19937_64 rng(16);
  std::bernoulli_distribution edge(0.35);
  for (int trial = 0; trial < 5; ++trial) {
    const int n = 10;
    std::vector<double> adj(n * n, 0.0);
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j)
        if (edge(rng)) adj[i * n + j] = adj[j * n + i] = 1.0;
    for (double t : {0.1, 0.7, 3.0, 10.0}) {
      const double h = heat_trace(adj, n, {t})[0];
      EXPECT_NEAR(h, taylor_heat_trace(adj, n, t)[0], 1e-6) << trial << " t=" << t;
    }
  }
}

TEST(Msid, TwoComponentLimits) {
  // Two disjoint triangles.
  const int n = 6;
  std::vector<double> adj(n * n, 0.0);
  for (int base : {0, 3})
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j)
        if (i != j) adj[(base + i) * n + base + j] = 1.0;
  const auto h = heat_trace(adj, n, {1e-8, 1e4});
  EXPECT_NEAR(h[0], 1.0, 1e-6);
  EXPECT_NEAR(h[1], 2.0 / 6.0, 1e-9);
}

TEST(Msid, Timestamps) {
  const auto t = msid_timestamps(256);
  ASSERT_EQ(t.size(), 256u);
  EXPECT_NEAR(t.front(), 0.1, 1e-12);
  EXPECT_NEAR(t.back(), 10.0, 1e-9);
  for (std::size_t i = 1; i < t.size(); ++i) EXPECT_GT(t[i], t[i - 1]);
}

TEST(Msid, IdentityPermutationAndErrors) {
  const FeatureMatrix a = gaussian_rows(60, 4, 17);
  EXPECT_NEAR(msid(a, a), 0.0, 1e-9);
  std::vector<int> perm(60);
  std::iota(perm.begin(), perm.end(), 0);
  std::shuffle(perm.begin(), perm.end(), std::mt19937_64(2));
  EXPECT_NEAR(msid(a, a.select_rows(perm)), 0.0, 1e-9);
  const FeatureMatrix b = gaussian_rows(60, 4, 18, 0.0, 3.0);
  // A global scale preserves every kNN graph.
  EXPECT_NEAR(msid(a, b), msid(a, gaussian_rows(60, 4, 18, 0.0, 1.0)), 1e-9);
  EXPECT_GE(msid(a, gaussian_rows(80, 4, 19)), 0.0);
  EXPECT_EQ(kind_of([] { msid(gaussian_rows(5, 2, 1), gaussian_rows(10, 2, 2)); }),
            ErrorKind::invalid_argument);
}

TEST(Msid, KnnAdjacencyIsSymmetric) {
  const FeatureMatrix a = gaussian_rows(15, 2, 20);
  const auto adj = knn_adjacency(a, 3);
  for (int i = 0; i < 15; ++i) {
    int deg = 0;
    EXPECT_EQ(adj[i * 15 + i], 0.0);
    for (int j = 0; j < 15; ++j) {
      EXPECT_EQ(adj[i * 15 + j], adj[j * 15 + i]);
      deg += adj[i * 15 + j] != 0.0;
    }
    EXPECT_GE(deg, 3);
  }
}

// ---- pairwise patch comparison ----

TEST(PairwiseDb, IdentityAndPatchCounts) {
  const Image img = test::natural_rgb(160, 192);
  EXPECT_NEAR(pairwise_db(DbMetric::fid, img, img), 0.0, 1e-6);
  int rows_seen = 0;
  const FeatureExtractor counting = [&](const PatchSet& p) {
    rows_seen = static_cast<int>(p.patches.size());
    return raw_features(p);
  };
  pairwise_db(DbMetric::fid, test::natural_gray(128, 128),
              test::add_gaussian_noise(test::natural_gray(128, 128), 0.1, 1), counting);
  EXPECT_EQ(rows_seen, 4);
}

TEST(PairwiseDb, FidGrowsWithNoise) {
  const Image img = test::natural_gray(256, 256);
  double prev = -1.0;
  for (double sigma : {0.05, 0.1, 0.2}) {
    const double v = pairwise_db(DbMetric::fid, img, test::add_gaussian_noise(img, sigma, 21));
    EXPECT_GE(v, prev) << sigma;
    prev = v;
  }
}

TEST(PairwiseDb, KidAndMsidRun) {
  const Image img = test::natural_gray(192, 192);
  const Image noisy = test::add_gaussian_noise(img, 0.1, 22);
  PairwiseOptions opt;
  opt.kid.subsets = 5;
  opt.msid.k_neighbors = 3;
  EXPECT_TRUE(std::isfinite(pairwise_db(DbMetric::kid, img, noisy, raw_features, opt)));
  EXPECT_GE(pairwise_db(DbMetric::msid, img, noisy, raw_features, opt), 0.0);
  EXPECT_EQ(pairwise_db(DbMetric::kid, img, noisy, raw_features, opt),
            pairwise_db(DbMetric::kid, img, noisy, raw_features, opt));
}

}  // namespace
}  // namespace iqa::db
