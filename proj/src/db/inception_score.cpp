#include <cmath>

#include "iqa/db_metrics.hpp"
#include "iqa/error.hpp"

namespace iqa::db {
namespace {

double split_score(const FeatureMatrix& p, int begin, int end) {
  const int c = p.cols();
  std::vector<double> marginal(c, 0.0);
  for (int r = begin; r < end; ++r)
    for (int k = 0; k < c; ++k) marginal[k] += p(r, k);
  for (double& m : marginal) m /= end - begin;

  double kl = 0.0;
  for (int r = begin; r < end; ++r) {
    for (int k = 0; k < c; ++k) {
      const double v = p(r, k);
      if (v > 0.0) kl += v * (std::log(v) - std::log(marginal[k]));
    }
  }
  return std::exp(kl / (end - begin));
}

}  // namespace

double inception_score(const FeatureMatrix& probs, int splits) {
  require(splits >= 1 && probs.rows() >= splits, ErrorKind::invalid_argument,
          "inception score needs at least one row per split");
  require(probs.cols() >= 1, ErrorKind::invalid_argument, "inception score needs class columns");
  for (int r = 0; r < probs.rows(); ++r) {
    double total = 0.0;
    for (double v : probs.row(r)) {
      require(v >= 0.0, ErrorKind::invalid_argument, "class probabilities must be non-negative");
      total += v;
    }
    require(std::abs(total - 1.0) <= 1e-6, ErrorKind::invalid_argument,
            "row " + std::to_string(r) + " is not a probability vector");
  }
  double acc = 0.0;
  const int n = probs.rows();
  for (int s = 0; s < splits; ++s) acc += split_score(probs, s * n / splits, (s + 1) * n / splits);
  return acc / splits;
}

}  // namespace iqa::db
