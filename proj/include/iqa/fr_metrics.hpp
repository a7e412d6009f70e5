#pragma once

// Full-reference metrics. Every metric takes (reference, distorted) images of
// identical shape; 3-channel input is reduced to luma unless noted.

#include <vector>

#include "iqa/image.hpp"

namespace iqa::fr {

struct FrScore {
  double value = 0.0;
  double perfect_value = 1.0;
  bool higher_is_better = true;
};

/// Per-scale exponents or weights of a multi-scale metric.
class ScaleWeights {
 public:
  explicit ScaleWeights(std::vector<double> weights);

  std::size_t size() const noexcept { return weights_.size(); }
  double operator[](std::size_t i) const { return weights_.at(i); }
  const std::vector<double>& values() const noexcept { return weights_; }

 private:
  std::vector<double> weights_;
};

const ScaleWeights& ms_ssim_weights();  // 0.0448 0.2856 0.3001 0.2363 0.1333
const ScaleWeights& ms_gmsd_weights();  // 0.096 0.596 0.289 0.019

// Minimum image sides.
inline constexpr int kSsimMinSide = 11;
inline constexpr int kMsSsimMinSide = 176;  // 2^4 * 11 for five scales
inline constexpr int kVifpMinSide = 41;
inline constexpr int kGmsdMinSide = 6;
inline constexpr int kMsGmsdMinSide = 17;
inline constexpr int kPhaseMinSide = 16;
inline constexpr int kSrSimMinSide = 40;  // the quarter-size saliency pass needs a 10x10 kernel
inline constexpr int kMdsiMinSide = 3;
inline constexpr int kHaarPsiMinSide = 16;
inline constexpr int kDssMinSide = 32;

/// 10 log10(1 / max(MSE, 1e-10)); identical inputs give the 100 dB cap.
FrScore psnr(const Image& ref, const Image& dist);

struct SsimMaps {
  Plane ssim;  // luminance * contrast-structure
  Plane cs;    // contrast-structure only
};

/// Local SSIM maps with an 11x11 Gaussian window (sigma 1.5), valid
/// convolution, C1 = (0.01 L)^2, C2 = (0.03 L)^2 for data range L.
SsimMaps ssim_maps(const Plane& x, const Plane& y, double data_range = 1.0);

/// Mean SSIM, per channel then averaged; inputs are first average-pooled
/// by the viewing-distance factor.
FrScore ssim(const Image& ref, const Image& dist);

/// Five-scale SSIM with 2x2 average pooling between scales.
FrScore ms_ssim(const Image& ref, const Image& dist,
                const ScaleWeights& weights = ms_ssim_weights());

struct IwSsimOptions {
  /// Replace the information-content maps by constant weights, reducing the
  /// metric to plain per-scale pooling over the Laplacian pyramid.
  bool uniform_weights = false;
};

FrScore iw_ssim(const Image& ref, const Image& dist, const IwSsimOptions& options = {});

/// Pixel-domain visual information fidelity over four scales.
FrScore vifp(const Image& ref, const Image& dist);

/// Gradient magnitude similarity deviation; 0 is perfect.
FrScore gmsd(const Image& ref, const Image& dist);

/// Four-scale GMSD; the chromatic variant blends in the I/Q RMSE of the last
/// scale. Chromatic mode needs RGB input.
FrScore ms_gmsd(const Image& ref, const Image& dist, bool chromatic = false);

/// FSIM (or FSIMc when chromatic; needs RGB input).
FrScore fsim(const Image& ref, const Image& dist, bool chromatic = false);

/// FSIM pooling on precomputed maps (255-scaled luma domain):
/// sum(S_pc * S_g * max(pc1, pc2)) / sum(max(pc1, pc2)).
double fsim_pool(const Plane& pc_ref, const Plane& pc_dist, const Plane& grad_ref,
                 const Plane& grad_dist);

/// Spectral-residual saliency of a 255-scaled luma plane. Normalised to [0, 1]
/// at quarter resolution; the bicubic upsampling back may overshoot slightly.
Plane spectral_residual_saliency(const Plane& luma);

FrScore sr_sim(const Image& ref, const Image& dist, bool chromatic = false);

/// SDSP saliency of an RGB image (gray input is replicated), in [0, 1].
Plane sdsp_saliency(const Image& image);

struct VsiMaps {
  Plane saliency_similarity;
  Plane gradient_similarity;
  Plane chroma_similarity;  // real((S_M * S_N)^beta)
  Plane weight;             // max(VS1, VS2)
};

VsiMaps vsi_maps(const Image& ref, const Image& dist);
FrScore vsi(const Image& ref, const Image& dist);

/// Deviation pooling of an MDSI similarity map: mean |g^q - mean(g^q)|
/// raised to o, with complex powers for negative samples.
double mdsi_deviation_pool(const Plane& gcs, double q = 0.25, double o = 0.25);

/// MDSI; 0 is perfect.
FrScore mdsi(const Image& ref, const Image& dist);

struct HaarPsiMaps {
  std::vector<Plane> similarity;  // horizontal, vertical[, chroma]
  std::vector<Plane> weights;     // matching weight maps
};

/// HaarPSI local maps for 255-scaled planes that are already subsampled.
/// Pass empty chroma vectors for luminance-only input.
HaarPsiMaps haarpsi_maps(const Plane& ref_y, const Plane& dist_y,
                         const std::vector<Plane>& ref_iq = {},
                         const std::vector<Plane>& dist_iq = {});

FrScore haarpsi(const Image& ref, const Image& dist);

/// Similarity of one DCT subband (255 domain): mean of the worst 5 % of the
/// local-variance term; the DC band is multiplied by the pooled structure term.
double dss_subband_similarity(const Plane& ref_band, const Plane& dist_band, bool dc);

FrScore dss(const Image& ref, const Image& dist);

}  // namespace iqa::fr
