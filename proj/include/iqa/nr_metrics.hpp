#pragma once

// No-reference metrics.

#include <array>
#include <filesystem>
#include <iosfwd>
#include <vector>

#include "iqa/image.hpp"

namespace iqa::nr {

enum class TvNorm { anisotropic, isotropic };

/// Forward-difference total variation divided by the pixel count, averaged
/// over channels. Needs both sides >= 2.
double total_variation(const Image& image, TvNorm norm = TvNorm::anisotropic);

inline constexpr int kBrisqueFeatureCount = 36;
inline constexpr int kBrisqueMinSide = 32;

using BrisqueFeatures = std::array<double, kBrisqueFeatureCount>;

/// (I - mu) / (sigma + 1) with a 7x7 Gaussian (sigma 7/6) window on a
/// 255-scaled plane. Replicate padding.
Plane mscn_coefficients(const Plane& luma255);

struct GgdFit {
  double alpha = 0.0;
  double variance = 0.0;
};

struct AggdFit {
  double alpha = 0.0;
  double mean = 0.0;
  double left_variance = 0.0;
  double right_variance = 0.0;
};

/// Moment-matching fits on a 1e-3 grid over alpha in [0.2, 10]; ties go to
/// the smaller alpha. Zero-variance input raises degenerate_input.
GgdFit fit_ggd(const Plane& x);
AggdFit fit_aggd(const Plane& x);

/// Two scales of (GGD of MSCN, AGGD of four neighbour products).
BrisqueFeatures brisque_features(const Image& image);

struct BrisqueModel {
  double gamma = 0.0;
  double rho = 0.0;
  std::vector<std::array<double, 2>> ranges;  // per-feature (min, max)
  std::vector<double> coefficients;
  std::vector<std::vector<double>> support_vectors;  // already scaled to [-1, 1]

  /// Throws parse_error when the model is internally inconsistent.
  void validate() const;
};

BrisqueModel read_brisque_model(std::istream& in);
BrisqueModel load_brisque_model(const std::filesystem::path& path);
void write_brisque_model(std::ostream& out, const BrisqueModel& model);

/// sum_i coef_i exp(-gamma |f - sv_i|^2) - rho, with f min-max scaled to
/// [-1, 1]. Lower is better.
double brisque_score(const std::vector<double>& features, const BrisqueModel& model);
double brisque_score(const BrisqueFeatures& features, const BrisqueModel& model);

}  // namespace iqa::nr
