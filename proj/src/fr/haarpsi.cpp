#include <algorithm>
#include <cmath>

#include "common.hpp"
#include "iqa/error.hpp"
#include "iqa/filter.hpp"
#include "iqa/fr_metrics.hpp"
#include "iqa/plane_ops.hpp"

namespace iqa::fr {
namespace {

constexpr int kScales = 3;
constexpr double kC = 30.0;
constexpr double kAlpha = 4.2;

// Haar response of size k, zero padded as MATLAB conv2(..., 'same') does for
// even kernels: k/2 - 1 samples before, k/2 after. `vertical` transposes the
// filter (left half positive).
Plane haar_response(const Plane& x, int k, bool vertical) {
  const int h = x.height();
  const int w = x.width();
  const int before = k / 2 - 1;
  Plane out(h, w);
  for (int r = 0; r < h; ++r) {
    for (int c = 0; c < w; ++c) {
      double acc = 0.0;
      for (int i = 0; i < k; ++i) {
        const int rr = r + i - before;
        if (rr < 0 || rr >= h) continue;
        for (int j = 0; j < k; ++j) {
          const int cc = c + j - before;
          if (cc < 0 || cc >= w) continue;
          const bool positive = vertical ? j < k / 2 : i < k / 2;
          acc += positive ? x(rr, cc) : -x(rr, cc);
        }
      }
      out(r, c) = acc / k;
    }
  }
  return out;
}

Plane abs_plane(const Plane& p) {
  return map(p, [](double v) { return std::abs(v); });
}

// 2x2 mean anchored at the top-left sample, zero beyond the last row/column.
Plane local_mean2(const Plane& x) {
  const int h = x.height();
  const int w = x.width();
  Plane out(h, w);
  for (int r = 0; r < h; ++r) {
    for (int c = 0; c < w; ++c) {
      double acc = x(r, c);
      if (c + 1 < w) acc += x(r, c + 1);
      if (r + 1 < h) acc += x(r + 1, c);
      if (r + 1 < h && c + 1 < w) acc += x(r + 1, c + 1);
      out(r, c) = acc / 4.0;
    }
  }
  return out;
}

double sigmoid(double v) { return 1.0 / (1.0 + std::exp(-v)); }

}  // namespace

HaarPsiMaps haarpsi_maps(const Plane& ref_y, const Plane& dist_y, const std::vector<Plane>& ref_iq,
                         const std::vector<Plane>& dist_iq) {
  require(ref_y.same_shape(dist_y), ErrorKind::dimension_mismatch, "haarpsi planes differ in shape");
  require(ref_iq.size() == dist_iq.size() && (ref_iq.empty() || ref_iq.size() == 2),
          ErrorKind::invalid_argument, "haarpsi chroma needs I and Q for both images");

  HaarPsiMaps maps;
  for (int orientation = 0; orientation < 2; ++orientation) {
    const bool vertical = orientation == 1;
    Plane similarity(ref_y.height(), ref_y.width());
    for (int s = 0; s < 2; ++s) {
      const int k = 2 << s;
      similarity = similarity + similarity_map(abs_plane(haar_response(ref_y, k, vertical)),
                                               abs_plane(haar_response(dist_y, k, vertical)), kC);
    }
    maps.similarity.push_back(similarity * 0.5);
    const int k_coarse = 2 << (kScales - 1);
    maps.weights.push_back(zip(haar_response(ref_y, k_coarse, vertical),
                               haar_response(dist_y, k_coarse, vertical),
                               [](double a, double b) { return std::max(std::abs(a), std::abs(b)); }));
  }

  if (!ref_iq.empty()) {
    const Plane sim_i =
        similarity_map(abs_plane(local_mean2(ref_iq[0])), abs_plane(local_mean2(dist_iq[0])), kC);
    const Plane sim_q =
        similarity_map(abs_plane(local_mean2(ref_iq[1])), abs_plane(local_mean2(dist_iq[1])), kC);
    maps.similarity.push_back((sim_i + sim_q) * 0.5);
    maps.weights.push_back((maps.weights[0] + maps.weights[1]) * 0.5);
  }
  return maps;
}

FrScore haarpsi(const Image& ref, const Image& dist) {
  detail::check_pair(ref, dist, kHaarPsiMinSide, "haarpsi");
  const bool color = ref.channels() == 3;
  const ColorPlanes x = detail::yiq(ref, 255.0);
  const ColorPlanes y = detail::yiq(dist, 255.0);

  std::vector<Plane> ref_iq;
  std::vector<Plane> dist_iq;
  if (color) {
    for (int ch = 1; ch < 3; ++ch) {
      ref_iq.push_back(avg_pool2(x[ch]));
      dist_iq.push_back(avg_pool2(y[ch]));
    }
  }
  const HaarPsiMaps maps = haarpsi_maps(avg_pool2(x[0]), avg_pool2(y[0]), ref_iq, dist_iq);

  double num = 0.0;
  double den = 0.0;
  double plain = 0.0;
  std::size_t count = 0;
  for (std::size_t m = 0; m < maps.similarity.size(); ++m) {
    auto s = maps.similarity[m].data();
    auto w = maps.weights[m].data();
    for (std::size_t i = 0; i < s.size(); ++i) {
      const double v = sigmoid(kAlpha * s[i]);
      num += v * w[i];
      den += w[i];
      plain += v;
      ++count;
    }
  }
  const double pooled = den > 0.0 ? num / den : plain / static_cast<double>(count);
  const double logit = std::log(pooled / (1.0 - pooled)) / kAlpha;
  return {logit * logit, 1.0, true};
}

}  // namespace iqa::fr
