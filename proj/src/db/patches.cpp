#include <cmath>
#include <numbers>

#include "iqa/color.hpp"
#include "iqa/db_metrics.hpp"
#include "iqa/error.hpp"

namespace iqa::db {

std::vector<int> patch_offsets(int length) {
  require(length >= kPatchSize, ErrorKind::image_too_small, "image smaller than one 96x96 patch");
  std::vector<int> out;
  for (int o = 0; o + kPatchSize <= length; o += kPatchStride) out.push_back(o);
  if (out.back() != length - kPatchSize) out.push_back(length - kPatchSize);
  return out;
}

PatchSet patchify(const Image& image) {
  const auto ys = patch_offsets(image.height());
  const auto xs = patch_offsets(image.width());
  PatchSet set;
  set.source_height = image.height();
  set.source_width = image.width();
  for (int y : ys) {
    for (int x : xs) {
      std::vector<Plane> channels;
      for (const Plane& p : image.planes()) channels.push_back(p.crop(y, x, kPatchSize, kPatchSize));
      set.patches.emplace_back(std::move(channels));
      set.offsets.emplace_back(y, x);
    }
  }
  return set;
}

std::vector<double> raw_patch_features(const Image& patch) {
  require(patch.height() == kPatchSize && patch.width() == kPatchSize, ErrorKind::invalid_argument,
          "raw features need a 96x96 patch");
  const Plane luma = luma_plane(patch);
  constexpr int kGrid = 8;
  constexpr int kCell = kPatchSize / kGrid;
  std::vector<double> out;
  out.reserve(kRawFeatureCount);
  for (int gy = 0; gy < kGrid; ++gy) {
    for (int gx = 0; gx < kGrid; ++gx) {
      double acc = 0.0;
      for (int r = 0; r < kCell; ++r)
        for (int c = 0; c < kCell; ++c) acc += luma(gy * kCell + r, gx * kCell + c);
      out.push_back(acc / (kCell * kCell));
    }
  }

  double bins[4] = {0.0, 0.0, 0.0, 0.0};
  for (int r = 0; r + 1 < kPatchSize; ++r) {
    for (int c = 0; c + 1 < kPatchSize; ++c) {
      const double gx = luma(r, c + 1) - luma(r, c);
      const double gy = luma(r + 1, c) - luma(r, c);
      const double m = std::hypot(gx, gy);
      if (m == 0.0) continue;
      double theta = std::atan2(gy, gx);
      if (theta < 0.0) theta += std::numbers::pi;
      const int bin = static_cast<int>(theta / (std::numbers::pi / 4.0)) % 4;
      bins[bin] += m;
    }
  }
  for (double b : bins) out.push_back(b / (kPatchSize * kPatchSize));
  return out;
}

FeatureMatrix raw_features(const PatchSet& patches) {
  std::vector<double> values;
  values.reserve(patches.patches.size() * kRawFeatureCount);
  for (const Image& p : patches.patches) {
    const auto f = raw_patch_features(p);
    values.insert(values.end(), f.begin(), f.end());
  }
  return FeatureMatrix(static_cast<int>(patches.patches.size()), kRawFeatureCount, std::move(values));
}

}  // namespace iqa::db

namespace iqa::db {

double pairwise_db(DbMetric metric, const Image& ref, const Image& dist,
                   const FeatureExtractor& extractor, const PairwiseOptions& options) {
  require(ref.same_shape(dist), ErrorKind::dimension_mismatch, "pairwise_db: image shapes differ");
  const FeatureMatrix fa = extractor(patchify(ref));
  const FeatureMatrix fb = extractor(patchify(dist));
  switch (metric) {
    case DbMetric::fid:
      return fid(fa, fb);
    case DbMetric::kid:
      return kid(fa, fb, options.kid).mean;
    case DbMetric::msid:
      return msid(fa, fb, options.msid);
  }
  fail(ErrorKind::invalid_argument, "unknown distribution metric");
}

}  // namespace iqa::db
