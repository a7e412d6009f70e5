#pragma once

// Distribution-based metrics over feature matrices, and the patch pipeline
// that turns a single image pair into two feature distributions.

#include <cstdint>
#include <filesystem>
#include <functional>
#include <iosfwd>
#include <span>
#include <utility>
#include <vector>

#include "iqa/image.hpp"

namespace iqa::db {

/// N samples x D features, row-major.
class FeatureMatrix {
 public:
  FeatureMatrix() = default;
  FeatureMatrix(int rows, int cols);
  FeatureMatrix(int rows, int cols, std::vector<double> values);

  int rows() const noexcept { return rows_; }
  int cols() const noexcept { return cols_; }
  double& operator()(int r, int c) { return values_[static_cast<std::size_t>(r) * cols_ + c]; }
  double operator()(int r, int c) const { return values_[static_cast<std::size_t>(r) * cols_ + c]; }
  std::span<const double> row(int r) const;
  std::span<const double> values() const noexcept { return values_; }

  /// Appends the rows of `other`; column counts must agree unless this is empty.
  void append(const FeatureMatrix& other);
  FeatureMatrix select_rows(const std::vector<int>& indices) const;

 private:
  int rows_ = 0;
  int cols_ = 0;
  std::vector<double> values_;
};

// FMX1: "FMX1", u32 N, u32 D, N*D float32, all little-endian.
FeatureMatrix read_fmx1(std::istream& in);
void write_fmx1(std::ostream& out, const FeatureMatrix& m);
/// One row per line, comma separated; a non-numeric first line is a header.
FeatureMatrix read_feature_csv(std::istream& in);
void write_feature_csv(std::ostream& out, const FeatureMatrix& m);
/// Detects the format from the magic bytes.
FeatureMatrix load_feature_matrix(const std::filesystem::path& path);
void save_fmx1(const std::filesystem::path& path, const FeatureMatrix& m);

inline constexpr int kPatchSize = 96;
inline constexpr int kPatchStride = 32;

struct PatchSet {
  std::vector<Image> patches;
  std::vector<std::pair<int, int>> offsets;  // (top, left)
  int source_height = 0;
  int source_width = 0;
};

/// Stride-32 offsets along one axis of `length`, plus length - 96 when the
/// grid misses the border.
std::vector<int> patch_offsets(int length);
PatchSet patchify(const Image& image);

inline constexpr int kRawFeatureCount = 68;

/// 8x8 grid of 12x12 luma means followed by the magnitude-weighted histogram
/// of forward-difference gradient orientations in four 45-degree bins
/// (normalised by the patch area).
std::vector<double> raw_patch_features(const Image& patch);
FeatureMatrix raw_features(const PatchSet& patches);

struct GaussianSummary {
  int dim = 0;
  std::vector<double> mean;
  std::vector<double> covariance;  // dim x dim, row-major

  double cov(int i, int j) const { return covariance[static_cast<std::size_t>(i) * dim + j]; }
};

/// Sample mean and unbiased covariance; needs N >= 2.
GaussianSummary gaussian_summary(const FeatureMatrix& f);

/// Squared Frechet distance between two Gaussians.
double fid(const GaussianSummary& a, const GaussianSummary& b);
double fid(const FeatureMatrix& a, const FeatureMatrix& b);

/// (x.y / D + 1)^3
double polynomial_kernel(std::span<const double> x, std::span<const double> y);

/// Unbiased MMD^2 between two equally sized sets under the polynomial kernel.
double mmd2_unbiased(const FeatureMatrix& a, const FeatureMatrix& b);

struct KidOptions {
  int subsets = 50;
  int subset_size = 0;  // 0 selects min(1000, Na, Nb)
  std::uint64_t seed = 0;
};

struct KidResult {
  double mean = 0.0;
  double stddev = 0.0;  // across subsets
};

KidResult kid(const FeatureMatrix& a, const FeatureMatrix& b, const KidOptions& options = {});

/// exp(mean KL(p(y|x) || p(y))) averaged over `splits` contiguous row blocks.
/// Rows must be probability vectors.
double inception_score(const FeatureMatrix& probs, int splits = 1);

struct MsidOptions {
  int k_neighbors = 5;
  int n_timestamps = 256;
};

/// n log-spaced temperatures in [0.1, 10].
std::vector<double> msid_timestamps(int n);

/// tr(exp(-t L)) / N of the normalised Laplacian of a symmetric adjacency
/// matrix (n x n, row-major). Isolated vertices contribute exp(0).
std::vector<double> heat_trace(const std::vector<double>& adjacency, int n,
                               const std::vector<double>& timestamps);

/// Symmetrised kNN adjacency (union of neighbour lists), ties by index.
std::vector<double> knn_adjacency(const FeatureMatrix& f, int k);

/// max_t exp(-2(t + 1/t)) |h_a(t) - h_b(t)| over the heat-trace descriptors.
double msid(const FeatureMatrix& a, const FeatureMatrix& b, const MsidOptions& options = {});

enum class DbMetric { fid, kid, msid };

using FeatureExtractor = std::function<FeatureMatrix(const PatchSet&)>;

struct PairwiseOptions {
  KidOptions kid;
  MsidOptions msid;
};

/// Patchify both images, extract features, compare the two distributions.
/// KID reports its subset mean.
double pairwise_db(DbMetric metric, const Image& ref, const Image& dist,
                   const FeatureExtractor& extractor = raw_features,
                   const PairwiseOptions& options = {});

}  // namespace iqa::db
