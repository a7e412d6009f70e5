#include "iqa/complex_field.hpp"

#include <fftw3.h>

#include <mutex>

#include "iqa/error.hpp"

namespace iqa {
namespace {

// FFTW planning is not thread-safe; execution on distinct arrays is.
std::mutex& planner_mutex() {
  static std::mutex m;
  return m;
}

ComplexField transform(const ComplexField& in, int sign) {
  ComplexField out(in.height(), in.width());
  if (in.size() == 0) return out;
  // std::complex<double> is layout-compatible with fftw_complex.
  auto* src = reinterpret_cast<fftw_complex*>(const_cast<std::complex<double>*>(in.values().data()));
  auto* dst = reinterpret_cast<fftw_complex*>(out.values().data());
  fftw_plan plan;
  {
    std::lock_guard lock(planner_mutex());
    plan = fftw_plan_dft_2d(in.height(), in.width(), src, dst, sign,
                            FFTW_ESTIMATE | FFTW_PRESERVE_INPUT);
  }
  require(plan != nullptr, ErrorKind::numerical, "FFTW planning failed");
  fftw_execute(plan);
  {
    std::lock_guard lock(planner_mutex());
    fftw_destroy_plan(plan);
  }
  return out;
}

}  // namespace

ComplexField::ComplexField(int height, int width)
    : height_(height), width_(width), values_(static_cast<std::size_t>(height) * width) {}

ComplexField::ComplexField(const Plane& real) : ComplexField(real.height(), real.width()) {
  auto src = real.data();
  for (std::size_t i = 0; i < src.size(); ++i) values_[i] = {src[i], 0.0};
}

ComplexField::ComplexField(const Plane& real, const Plane& imag)
    : ComplexField(real.height(), real.width()) {
  require(real.same_shape(imag), ErrorKind::dimension_mismatch, "real/imag planes differ");
  auto re = real.data();
  auto im = imag.data();
  for (std::size_t i = 0; i < re.size(); ++i) values_[i] = {re[i], im[i]};
}

Plane ComplexField::real() const {
  Plane out(height_, width_);
  auto d = out.data();
  for (std::size_t i = 0; i < values_.size(); ++i) d[i] = values_[i].real();
  return out;
}

Plane ComplexField::imag() const {
  Plane out(height_, width_);
  auto d = out.data();
  for (std::size_t i = 0; i < values_.size(); ++i) d[i] = values_[i].imag();
  return out;
}

Plane ComplexField::abs() const {
  Plane out(height_, width_);
  auto d = out.data();
  for (std::size_t i = 0; i < values_.size(); ++i) d[i] = std::abs(values_[i]);
  return out;
}

ComplexField fft2(const ComplexField& field) { return transform(field, FFTW_FORWARD); }

ComplexField fft2(const Plane& plane) { return fft2(ComplexField(plane)); }

ComplexField ifft2(const ComplexField& field) {
  ComplexField out = transform(field, FFTW_BACKWARD);
  const double norm = 1.0 / static_cast<double>(field.size());
  for (auto& v : out.values()) v *= norm;
  return out;
}

ComplexField multiply(const ComplexField& field, const Plane& filter) {
  require(field.height() == filter.height() && field.width() == filter.width(),
          ErrorKind::dimension_mismatch, "filter shape differs from field");
  ComplexField out = field;
  auto f = filter.data();
  auto& v = out.values();
  for (std::size_t i = 0; i < v.size(); ++i) v[i] *= f[i];
  return out;
}

}  // namespace iqa
