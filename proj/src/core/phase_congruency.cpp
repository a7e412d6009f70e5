#include "iqa/phase_congruency.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "iqa/complex_field.hpp"
#include "iqa/error.hpp"
#include "iqa/plane_ops.hpp"

namespace iqa {

double fft_frequency(int i, int n) {
  const int half = (n + 1) / 2;
  const double denom = n % 2 ? n - 1 : n;
  if (denom == 0) return 0.0;
  return (i < half ? i : i - n) / denom;
}

LogGaborBank log_gabor_bank(int height, int width, const LogGaborParams& params) {
  require(params.scales >= 1 && params.orientations >= 1, ErrorKind::invalid_argument,
          "log-Gabor bank needs at least one scale and orientation");
  LogGaborBank bank;
  bank.height = height;
  bank.width = width;

  Plane radius(height, width);
  Plane theta(height, width);
  Plane lowpass(height, width);
  for (int r = 0; r < height; ++r) {
    const double y = fft_frequency(r, height);
    for (int c = 0; c < width; ++c) {
      const double x = fft_frequency(c, width);
      const double rad = std::sqrt(x * x + y * y);
      radius(r, c) = rad;
      theta(r, c) = std::atan2(-y, x);
      lowpass(r, c) =
          1.0 / (1.0 + std::pow(rad / params.lowpass_cutoff, 2.0 * params.lowpass_order));
    }
  }
  radius(0, 0) = 1.0;

  const double log_sigma = std::log(params.sigma_on_f);
  std::vector<Plane> radial;
  for (int s = 0; s < params.scales; ++s) {
    const double fo = 1.0 / (params.min_wavelength * std::pow(params.mult, s));
    Plane g(height, width);
    for (int r = 0; r < height; ++r) {
      for (int c = 0; c < width; ++c) {
        const double l = std::log(radius(r, c) / fo);
        g(r, c) = std::exp(-(l * l) / (2.0 * log_sigma * log_sigma)) * lowpass(r, c);
      }
    }
    g(0, 0) = 0.0;
    radial.push_back(std::move(g));
  }

  const double theta_sigma = std::numbers::pi / params.orientations / params.d_theta_on_sigma;
  std::vector<Plane> spread;
  for (int o = 0; o < params.orientations; ++o) {
    const double angle = o * std::numbers::pi / params.orientations;
    Plane sp(height, width);
    for (int r = 0; r < height; ++r) {
      for (int c = 0; c < width; ++c) {
        const double st = std::sin(theta(r, c));
        const double ct = std::cos(theta(r, c));
        const double ds = st * std::cos(angle) - ct * std::sin(angle);
        const double dc = ct * std::cos(angle) + st * std::sin(angle);
        const double dtheta = std::abs(std::atan2(ds, dc));
        sp(r, c) = std::exp(-(dtheta * dtheta) / (2.0 * theta_sigma * theta_sigma));
      }
    }
    spread.push_back(std::move(sp));
  }

  bank.filters.resize(params.scales);
  for (int s = 0; s < params.scales; ++s) {
    for (int o = 0; o < params.orientations; ++o) {
      Plane f(height, width);
      auto a = radial[s].data();
      auto b = spread[o].data();
      auto d = f.data();
      for (std::size_t i = 0; i < d.size(); ++i) d[i] = a[i] * b[i];
      bank.filters[s].push_back(std::move(f));
    }
  }
  return bank;
}

PhaseCongruency phase_congruency(const Plane& plane, const LogGaborParams& params) {
  require(plane.height() >= 16 && plane.width() >= 16, ErrorKind::image_too_small,
          "phase congruency needs at least 16x16 samples");
  const int h = plane.height();
  const int w = plane.width();
  const std::size_t n = plane.size();
  const auto bank = log_gabor_bank(h, w, params);
  const ComplexField spectrum = fft2(plane);

  PhaseCongruency out;
  Plane energy_all(h, w);
  Plane amplitude_all(h, w);
  for (int o = 0; o < params.orientations; ++o) {
    std::vector<ComplexField> eo;
    std::vector<Plane> spatial;
    Plane sum_e(h, w), sum_o(h, w), sum_an(h, w);
    double em_n = 0.0;
    for (int s = 0; s < params.scales; ++s) {
      const Plane& filter = bank.filters[s][o];
      spatial.push_back(ifft2(ComplexField(filter)).real() * std::sqrt(static_cast<double>(n)));
      eo.push_back(ifft2(multiply(spectrum, filter)));
      const auto& v = eo.back().values();
      for (std::size_t i = 0; i < n; ++i) {
        sum_an.data()[i] += std::abs(v[i]);
        sum_e.data()[i] += v[i].real();
        sum_o.data()[i] += v[i].imag();
      }
      if (s == 0) {
        for (double f : filter.data()) em_n += f * f;
      }
    }

    Plane energy(h, w);
    for (std::size_t i = 0; i < n; ++i) {
      const double xe = std::hypot(sum_e.data()[i], sum_o.data()[i]) + params.epsilon;
      const double mean_e = sum_e.data()[i] / xe;
      const double mean_o = sum_o.data()[i] / xe;
      double acc = 0.0;
      for (int s = 0; s < params.scales; ++s) {
        const double e = eo[s].values()[i].real();
        const double od = eo[s].values()[i].imag();
        acc += e * mean_e + od * mean_o - std::abs(e * mean_o - od * mean_e);
      }
      energy.data()[i] = acc;
    }

    // Noise model: the smallest-scale response is assumed Rayleigh distributed.
    std::vector<double> e2(n);
    for (std::size_t i = 0; i < n; ++i) e2[i] = std::norm(eo[0].values()[i]);
    const double median_e2 = [&] {
      std::sort(e2.begin(), e2.end());
      return n % 2 ? e2[n / 2] : 0.5 * (e2[n / 2 - 1] + e2[n / 2]);
    }();
    const double mean_e2n = -median_e2 / std::log(0.5);
    const double noise_power = em_n > 0.0 ? mean_e2n / em_n : 0.0;

    double sum_an2 = 0.0;
    double sum_aiaj = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      for (int si = 0; si < params.scales; ++si) {
        const double a = spatial[si].data()[i];
        sum_an2 += a * a;
        for (int sj = si + 1; sj < params.scales; ++sj) sum_aiaj += a * spatial[sj].data()[i];
      }
    }
    const double noise_energy2 = 2.0 * noise_power * sum_an2 + 4.0 * noise_power * sum_aiaj;
    const double tau = std::sqrt(std::max(noise_energy2, 0.0) / 2.0);
    const double noise_mean = tau * std::sqrt(std::numbers::pi / 2.0);
    const double noise_sigma = std::sqrt((2.0 - std::numbers::pi / 2.0) * tau * tau);
    const double threshold = (noise_mean + params.k * noise_sigma) / params.noise_divisor;

    for (auto& v : energy.data()) v = std::max(v - threshold, 0.0);
    energy_all = energy_all + energy;
    amplitude_all = amplitude_all + sum_an;
    out.energy.push_back(std::move(energy));
  }

  out.pc = Plane(h, w);
  for (std::size_t i = 0; i < n; ++i) {
    out.pc.data()[i] = energy_all.data()[i] / (amplitude_all.data()[i] + params.epsilon);
  }
  return out;
}

}  // namespace iqa
