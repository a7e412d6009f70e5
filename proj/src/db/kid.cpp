#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>

#include "iqa/db_metrics.hpp"
#include "iqa/error.hpp"

namespace iqa::db {

double polynomial_kernel(std::span<const double> x, std::span<const double> y) {
  require(x.size() == y.size() && !x.empty(), ErrorKind::dimension_mismatch,
          "kernel arguments differ in dimension");
  double dot = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) dot += x[i] * y[i];
  const double v = dot / static_cast<double>(x.size()) + 1.0;
  return v * v * v;
}

double mmd2_unbiased(const FeatureMatrix& a, const FeatureMatrix& b) {
  require(a.rows() == b.rows() && a.rows() >= 2, ErrorKind::invalid_argument,
          "unbiased MMD needs two sets of equal size >= 2");
  require(a.cols() == b.cols(), ErrorKind::dimension_mismatch, "kid: feature dimensions differ");
  const int m = a.rows();
  double xx = 0.0, yy = 0.0, xy = 0.0;
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < m; ++j) {
      if (i != j) {
        xx += polynomial_kernel(a.row(i), a.row(j));
        yy += polynomial_kernel(b.row(i), b.row(j));
      }
      xy += polynomial_kernel(a.row(i), b.row(j));
    }
  }
  const double md = m;
  return (xx + yy) / (md * (md - 1.0)) - 2.0 * xy / (md * md);
}

KidResult kid(const FeatureMatrix& a, const FeatureMatrix& b, const KidOptions& options) {
  require(options.subsets >= 1, ErrorKind::invalid_argument, "kid needs at least one subset");
  const int available = std::min(a.rows(), b.rows());
  const int size = options.subset_size > 0 ? options.subset_size : std::min(1000, available);
  require(size <= available, ErrorKind::invalid_argument, "kid subset size exceeds the sample count");
  require(size >= 2, ErrorKind::invalid_argument, "kid subsets need at least 2 samples");

  std::mt19937_64 rng(options.seed);
  auto draw = [&rng, size](int n) {
    std::vector<int> idx(n);
    std::iota(idx.begin(), idx.end(), 0);
    // Partial Fisher-Yates: the first `size` entries are the subset.
    for (int i = 0; i < size; ++i) {
      std::uniform_int_distribution<int> pick(i, n - 1);
      std::swap(idx[i], idx[pick(rng)]);
    }
    idx.resize(size);
    return idx;
  };

  std::vector<double> values;
  for (int s = 0; s < options.subsets; ++s) {
    const auto ia = draw(a.rows());
    const auto ib = draw(b.rows());
    values.push_back(mmd2_unbiased(a.select_rows(ia), b.select_rows(ib)));
  }
  KidResult out;
  out.mean = std::accumulate(values.begin(), values.end(), 0.0) / values.size();
  if (values.size() > 1) {
    double acc = 0.0;
    for (double v : values) acc += (v - out.mean) * (v - out.mean);
    out.stddev = std::sqrt(acc / (values.size() - 1));
  }
  return out;
}

}  // namespace iqa::db
