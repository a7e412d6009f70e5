#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <limits>
#include <optional>

#include "common.hpp"
#include "iqa/filter.hpp"
#include "iqa/fr_metrics.hpp"
#include "iqa/plane_ops.hpp"
#include "iqa/resize.hpp"

namespace iqa::fr {
namespace {

constexpr double kNoiseVariance = 0.4;
constexpr double kEps = std::numeric_limits<double>::epsilon();

const Kernel2D& binomial() {
  // binom5 scaled by sqrt(2) per axis, as in the steerable-pyramid toolbox.
  static const Kernel2D k = [] {
    std::vector<double> taps{1.0, 4.0, 6.0, 4.0, 1.0};
    for (double& t : taps) t *= std::sqrt(2.0) / 16.0;
    return Kernel2D::from_factors(taps, taps);
  }();
  return k;
}

struct PyramidStep {
  Plane low;
  Plane band;
};

PyramidStep pyramid_step(const Plane& x) {
  const Plane blurred = convolve2d(x, binomial(), Padding::reflect);
  const int lh = (x.height() + 1) / 2;
  const int lw = (x.width() + 1) / 2;
  Plane low(lh, lw);
  for (int r = 0; r < lh; ++r)
    for (int c = 0; c < lw; ++c) low(r, c) = blurred(2 * r, 2 * c);

  Plane up(2 * lh, 2 * lw);
  for (int r = 0; r < lh; ++r)
    for (int c = 0; c < lw; ++c) up(2 * r, 2 * c) = low(r, c);
  const Plane expanded =
      convolve2d(up, binomial(), Padding::reflect).crop(0, 0, x.height(), x.width());
  return {low, x - expanded};
}

// Bilinear enlargement to twice the size with linear extrapolation at the
// border, used to align a parent band with its child.
Plane enlarge(const Plane& x) {
  const int h = x.height();
  const int w = x.width();
  const Plane t1 = resize_bilinear(x, 4 * h - 3, 4 * w - 3, false);
  Plane t2(4 * h - 1, 4 * w - 1);
  for (int r = 0; r < t1.height(); ++r)
    for (int c = 0; c < t1.width(); ++c) t2(r + 1, c + 1) = t1(r, c);
  const int lr = t2.height() - 1;
  const int lc = t2.width() - 1;
  for (int c = 0; c <= lc; ++c) {
    t2(0, c) = 2.0 * t2(1, c) - t2(2, c);
    t2(lr, c) = 2.0 * t2(lr - 1, c) - t2(lr - 2, c);
  }
  for (int r = 0; r <= lr; ++r) {
    t2(r, 0) = 2.0 * t2(r, 1) - t2(r, 2);
    t2(r, lc) = 2.0 * t2(r, lc - 1) - t2(r, lc - 2);
  }
  Plane out(2 * h, 2 * w);
  for (int r = 0; r < 2 * h; ++r)
    for (int c = 0; c < 2 * w; ++c) out(r, c) = t2(2 * r, 2 * c);
  return out;
}

// Information-content map of a band under the Gaussian scale mixture model.
// `ref` drives the model, `dist` the distortion channel. Output covers the
// interior (H-2)x(W-2) centers of the 3x3 neighbourhoods.
Plane information_content(const Plane& dist, const Plane& ref, const std::optional<Plane>& parent) {
  const int h = ref.height();
  const int w = ref.width();
  const int nh = h - 2;
  const int nw = w - 2;
  const Kernel2D box = Kernel2D::box(3);
  const Plane mu_x = convolve2d(dist, box, Padding::valid);
  const Plane mu_y = convolve2d(ref, box, Padding::valid);
  const Plane xx = convolve2d(dist * dist, box, Padding::valid);
  const Plane yy = convolve2d(ref * ref, box, Padding::valid);
  const Plane xy = convolve2d(dist * ref, box, Padding::valid);

  Plane g(nh, nw);
  Plane vv(nh, nw);
  for (std::size_t i = 0; i < g.size(); ++i) {
    const double mx = mu_x.data()[i];
    const double my = mu_y.data()[i];
    const double sxx = std::max(xx.data()[i] - mx * mx, 0.0);
    const double syy = std::max(yy.data()[i] - my * my, 0.0);
    const double sxy = xy.data()[i] - mx * my;
    double gi = sxy / (syy + kEps);
    double vi = sxx - gi * sxy;
    if (syy < kEps) {
      gi = 0.0;
      vi = sxx;
    }
    if (sxx < kEps) {
      gi = 0.0;
      vi = 0.0;
    }
    g.data()[i] = gi;
    vv.data()[i] = vi;
  }

  std::optional<Plane> parent_up;
  if (parent) parent_up = enlarge(*parent).crop(0, 0, h, w);
  const int dims = parent ? 10 : 9;
  const Eigen::Index rows = static_cast<Eigen::Index>(nh) * nw;
  Eigen::MatrixXd y(rows, dims);
  for (int r = 0; r < nh; ++r) {
    for (int c = 0; c < nw; ++c) {
      const Eigen::Index row = static_cast<Eigen::Index>(r) * nw + c;
      int k = 0;
      for (int dr = -1; dr <= 1; ++dr)
        for (int dc = -1; dc <= 1; ++dc) y(row, k++) = ref(r + 1 + dr, c + 1 + dc);
      if (parent_up) y(row, k) = (*parent_up)(r + 1, c + 1);
    }
  }

  const Eigen::MatrixXd cov = (y.transpose() * y) / static_cast<double>(rows);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> eig(cov);
  Eigen::VectorXd lambda = eig.eigenvalues();
  const double total = lambda.sum();
  const Eigen::VectorXd clamped = lambda.cwiseMax(0.0);
  const double positive = clamped.sum();
  lambda = clamped * (total / (positive == 0.0 ? 1.0 : positive));

  // Pseudo-inverse: the model covariance can be singular for flat bands.
  Eigen::VectorXd inv = Eigen::VectorXd::Zero(dims);
  const double cutoff = lambda.maxCoeff() * 1e-12;
  for (int j = 0; j < dims; ++j) inv(j) = lambda(j) > cutoff ? 1.0 / lambda(j) : 0.0;
  const Eigen::MatrixXd cov_inv = eig.eigenvectors() * inv.asDiagonal() * eig.eigenvectors().transpose();
  const Eigen::VectorXd ss = ((y * cov_inv).cwiseProduct(y)).rowwise().sum() / dims;

  const double n2 = kNoiseVariance;
  Plane out(nh, nw);
  for (Eigen::Index i = 0; i < rows; ++i) {
    const double gi = g.data()[i];
    const double vi = vv.data()[i];
    double acc = 0.0;
    for (int j = 0; j < dims; ++j) {
      acc += std::log2(1.0 + ((vi + (1.0 + gi * gi) * n2) * ss(i) * lambda(j) + n2 * vi) / (n2 * n2));
    }
    out.data()[i] = acc < kEps ? 0.0 : acc;
  }
  return out;
}

}  // namespace

FrScore iw_ssim(const Image& ref, const Image& dist, const IwSsimOptions& options) {
  const auto& weights = ms_ssim_weights();
  const int levels = static_cast<int>(weights.size());
  detail::check_pair(ref, dist, kMsSsimMinSide, "iw_ssim");

  // Bands 0..levels-2 are Laplacian details, the last band is the low-pass residual.
  std::vector<Plane> ref_bands;
  std::vector<Plane> dist_bands;
  Plane x = detail::luma(ref, 255.0);
  Plane y = detail::luma(dist, 255.0);
  for (int s = 0; s < levels - 1; ++s) {
    auto rs = pyramid_step(x);
    auto ds = pyramid_step(y);
    ref_bands.push_back(std::move(rs.band));
    dist_bands.push_back(std::move(ds.band));
    x = std::move(rs.low);
    y = std::move(ds.low);
  }
  ref_bands.push_back(x);
  dist_bands.push_back(y);

  constexpr int kCrop = 4;  // aligns the (H-2) information map with the valid 11x11 window
  double score = 1.0;
  for (int s = 0; s < levels; ++s) {
    const auto maps = ssim_maps(dist_bands[s], ref_bands[s], 255.0);
    const bool last = s == levels - 1;
    const Plane& values = last ? maps.ssim : maps.cs;
    double pooled = 0.0;
    if (last || options.uniform_weights) {
      pooled = mean(values);
    } else {
      std::optional<Plane> parent;
      if (s < levels - 2) parent = ref_bands[s + 1];
      const Plane info = information_content(dist_bands[s], ref_bands[s], parent);
      const Plane weight =
          info.crop(kCrop, kCrop, info.height() - 2 * kCrop, info.width() - 2 * kCrop);
      pooled = weighted_mean(values, weight);
    }
    score *= std::pow(std::abs(pooled), weights[s]);
  }
  return {score, 1.0, true};
}

}  // namespace iqa::fr
