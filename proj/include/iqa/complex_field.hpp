#pragma once

#include <complex>
#include <vector>

#include "iqa/image.hpp"

namespace iqa {

/// Complex-valued 2-D field (frequency-domain filter responses).
class ComplexField {
 public:
  ComplexField() = default;
  ComplexField(int height, int width);
  explicit ComplexField(const Plane& real);
  ComplexField(const Plane& real, const Plane& imag);

  int height() const noexcept { return height_; }
  int width() const noexcept { return width_; }
  std::size_t size() const noexcept { return values_.size(); }

  std::complex<double>& operator()(int r, int c) noexcept {
    return values_[static_cast<std::size_t>(r) * width_ + c];
  }
  const std::complex<double>& operator()(int r, int c) const noexcept {
    return values_[static_cast<std::size_t>(r) * width_ + c];
  }
  std::vector<std::complex<double>>& values() noexcept { return values_; }
  const std::vector<std::complex<double>>& values() const noexcept { return values_; }

  Plane real() const;
  Plane imag() const;
  Plane abs() const;

 private:
  int height_ = 0;
  int width_ = 0;
  std::vector<std::complex<double>> values_;
};

/// Unnormalised forward DFT.
ComplexField fft2(const ComplexField& field);
ComplexField fft2(const Plane& plane);
/// Inverse DFT including the 1/(H*W) factor, so ifft2(fft2(x)) == x.
ComplexField ifft2(const ComplexField& field);

/// Element-wise product with a real frequency-domain filter.
ComplexField multiply(const ComplexField& field, const Plane& filter);

}  // namespace iqa
