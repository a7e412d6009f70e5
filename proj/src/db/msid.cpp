#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <numeric>

#include "iqa/db_metrics.hpp"
#include "iqa/error.hpp"

namespace iqa::db {

std::vector<double> msid_timestamps(int n) {
  require(n >= 2, ErrorKind::invalid_argument, "msid needs at least two timestamps");
  std::vector<double> t(n);
  for (int i = 0; i < n; ++i) t[i] = std::pow(10.0, -1.0 + 2.0 * i / (n - 1));
  return t;
}

std::vector<double> heat_trace(const std::vector<double>& adjacency, int n,
                               const std::vector<double>& timestamps) {
  require(n >= 1 && adjacency.size() == static_cast<std::size_t>(n) * n, ErrorKind::dimension_mismatch,
          "adjacency must be n x n");
  Eigen::Map<const Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>> a(
      adjacency.data(), n, n);
  const Eigen::VectorXd degree = a.rowwise().sum();
  Eigen::VectorXd scale(n);
  for (int i = 0; i < n; ++i) scale(i) = degree(i) > 0.0 ? 1.0 / std::sqrt(degree(i)) : 0.0;
  Eigen::MatrixXd laplacian = -(scale.asDiagonal() * a * scale.asDiagonal());
  for (int i = 0; i < n; ++i) laplacian(i, i) += degree(i) > 0.0 ? 1.0 : 0.0;
  laplacian = 0.5 * (laplacian + laplacian.transpose());

  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> eig(laplacian, Eigen::EigenvaluesOnly);
  const Eigen::VectorXd lambda = eig.eigenvalues();
  std::vector<double> out;
  out.reserve(timestamps.size());
  for (double t : timestamps) {
    double acc = 0.0;
    for (Eigen::Index i = 0; i < lambda.size(); ++i) acc += std::exp(-t * lambda(i));
    out.push_back(acc / n);
  }
  return out;
}

std::vector<double> knn_adjacency(const FeatureMatrix& f, int k) {
  const int n = f.rows();
  require(k >= 1, ErrorKind::invalid_argument, "kNN graph needs k >= 1");
  require(n >= k + 1, ErrorKind::invalid_argument, "kNN graph needs more samples than neighbours");
  std::vector<double> adjacency(static_cast<std::size_t>(n) * n, 0.0);
  std::vector<std::pair<double, int>> dist;
  for (int i = 0; i < n; ++i) {
    dist.clear();
    const auto xi = f.row(i);
    for (int j = 0; j < n; ++j) {
      if (j == i) continue;
      const auto xj = f.row(j);
      double d = 0.0;
      for (int c = 0; c < f.cols(); ++c) d += (xi[c] - xj[c]) * (xi[c] - xj[c]);
      dist.emplace_back(d, j);
    }
    std::partial_sort(dist.begin(), dist.begin() + k, dist.end());
    for (int m = 0; m < k; ++m) {
      const int j = dist[m].second;
      adjacency[static_cast<std::size_t>(i) * n + j] = 1.0;
      adjacency[static_cast<std::size_t>(j) * n + i] = 1.0;
    }
  }
  return adjacency;
}

double msid(const FeatureMatrix& a, const FeatureMatrix& b, const MsidOptions& options) {
  const auto t = msid_timestamps(options.n_timestamps);
  const auto ha = heat_trace(knn_adjacency(a, options.k_neighbors), a.rows(), t);
  const auto hb = heat_trace(knn_adjacency(b, options.k_neighbors), b.rows(), t);
  double score = 0.0;
  for (std::size_t i = 0; i < t.size(); ++i) {
    const double weight = std::exp(-2.0 * (t[i] + 1.0 / t[i]));
    score = std::max(score, weight * std::abs(ha[i] - hb[i]));
  }
  return score;
}

}  // namespace iqa::db
