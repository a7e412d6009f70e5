#pragma once

#include <vector>

#include "iqa/image.hpp"

namespace iqa {

/// Parameters of the Kovesi log-Gabor bank.
struct LogGaborParams {
  int scales = 4;
  int orientations = 4;
  double min_wavelength = 6.0;
  double mult = 2.0;
  double sigma_on_f = 0.55;
  double d_theta_on_sigma = 1.2;  // angular sigma = pi / orientations / d_theta_on_sigma
  double k = 2.0;                 // noise threshold in Rayleigh standard deviations
  double noise_divisor = 1.7;
  double lowpass_cutoff = 0.45;
  int lowpass_order = 15;
  double epsilon = 1e-4;
};

/// Frequency-domain filters in FFT (unshifted) layout: filters[s][o] is the
/// radial log-Gabor of scale s times the angular spread of orientation o.
struct LogGaborBank {
  int height = 0;
  int width = 0;
  std::vector<std::vector<Plane>> filters;
};

LogGaborBank log_gabor_bank(int height, int width, const LogGaborParams& params = {});

/// Normalised frequency coordinate of FFT bin i along an axis of length n,
/// matching MATLAB's ifftshift'ed meshgrid in the Kovesi code.
double fft_frequency(int i, int n);

struct PhaseCongruency {
  Plane pc;                     // in [0, 1]
  std::vector<Plane> energy;    // thresholded local energy, one per orientation
};

/// Phase congruency of a plane (FSIM's phasecong2 variant). Requires 16x16.
PhaseCongruency phase_congruency(const Plane& plane, const LogGaborParams& params = {});

}  // namespace iqa
