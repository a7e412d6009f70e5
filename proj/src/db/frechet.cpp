#include <Eigen/Dense>
#include <cmath>

#include "iqa/db_metrics.hpp"
#include "iqa/error.hpp"

namespace iqa::db {
namespace {

constexpr double kNegativeRelative = 1e-6;

Eigen::MatrixXd to_matrix(const GaussianSummary& s) {
  Eigen::MatrixXd m(s.dim, s.dim);
  for (int i = 0; i < s.dim; ++i)
    for (int j = 0; j < s.dim; ++j) m(i, j) = s.cov(i, j);
  return m;
}

// Eigenvalues of a symmetric PSD matrix with negative rounding noise clamped
// to 0; clearly negative values mean the input was not a covariance.
Eigen::VectorXd clamped_eigenvalues(const Eigen::VectorXd& values, const char* what) {
  const double largest = values.cwiseAbs().maxCoeff();
  Eigen::VectorXd out = values;
  for (Eigen::Index i = 0; i < out.size(); ++i) {
    if (out(i) < -kNegativeRelative * largest) {
      fail(ErrorKind::numerical, std::string(what) + " has a negative eigenvalue beyond tolerance");
    }
    if (out(i) < 0.0) out(i) = 0.0;
  }
  return out;
}

}  // namespace

GaussianSummary gaussian_summary(const FeatureMatrix& f) {
  require(f.rows() >= 2, ErrorKind::invalid_argument, "gaussian summary needs at least 2 samples");
  const int n = f.rows();
  const int d = f.cols();
  GaussianSummary s;
  s.dim = d;
  s.mean.assign(d, 0.0);
  for (int r = 0; r < n; ++r)
    for (int c = 0; c < d; ++c) s.mean[c] += f(r, c);
  for (double& m : s.mean) m /= n;

  s.covariance.assign(static_cast<std::size_t>(d) * d, 0.0);
  std::vector<double> centred(d);
  for (int r = 0; r < n; ++r) {
    for (int c = 0; c < d; ++c) centred[c] = f(r, c) - s.mean[c];
    for (int i = 0; i < d; ++i)
      for (int j = i; j < d; ++j) s.covariance[static_cast<std::size_t>(i) * d + j] += centred[i] * centred[j];
  }
  for (int i = 0; i < d; ++i) {
    for (int j = i; j < d; ++j) {
      double& v = s.covariance[static_cast<std::size_t>(i) * d + j];
      v /= n - 1;
      s.covariance[static_cast<std::size_t>(j) * d + i] = v;
    }
  }
  return s;
}

double fid(const GaussianSummary& a, const GaussianSummary& b) {
  require(a.dim == b.dim && a.dim > 0, ErrorKind::dimension_mismatch, "fid: feature dimensions differ");
  double mean_term = 0.0;
  for (int i = 0; i < a.dim; ++i) mean_term += (a.mean[i] - b.mean[i]) * (a.mean[i] - b.mean[i]);

  const Eigen::MatrixXd sa = to_matrix(a);
  const Eigen::MatrixXd sb = to_matrix(b);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> eig_a(sa);
  const Eigen::VectorXd la = clamped_eigenvalues(eig_a.eigenvalues(), "first covariance");
  const Eigen::MatrixXd root_a =
      eig_a.eigenvectors() * la.cwiseSqrt().asDiagonal() * eig_a.eigenvectors().transpose();
  Eigen::MatrixXd inner = root_a * sb * root_a;
  inner = 0.5 * (inner + inner.transpose());
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> eig_m(inner, Eigen::EigenvaluesOnly);
  const Eigen::VectorXd lm = clamped_eigenvalues(eig_m.eigenvalues(), "covariance product");

  const double value = mean_term + sa.trace() + sb.trace() - 2.0 * lm.cwiseSqrt().sum();
  require(std::isfinite(value), ErrorKind::numerical, "fid is not finite");
  return std::max(value, 0.0);
}

double fid(const FeatureMatrix& a, const FeatureMatrix& b) {
  return fid(gaussian_summary(a), gaussian_summary(b));
}

}  // namespace iqa::db
