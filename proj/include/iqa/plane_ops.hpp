#pragma once

// Element-wise helpers over Plane. Header-only; shapes are checked.

#include <algorithm>
#include <cmath>
#include <numeric>

#include "iqa/error.hpp"
#include "iqa/image.hpp"

namespace iqa {

template <typename F>
Plane map(const Plane& a, F&& f) {
  Plane out(a.height(), a.width());
  auto src = a.data();
  auto dst = out.data();
  for (std::size_t i = 0; i < src.size(); ++i) dst[i] = f(src[i]);
  return out;
}

template <typename F>
Plane zip(const Plane& a, const Plane& b, F&& f) {
  require(a.same_shape(b), ErrorKind::dimension_mismatch, "plane shapes differ");
  Plane out(a.height(), a.width());
  auto x = a.data();
  auto y = b.data();
  auto dst = out.data();
  for (std::size_t i = 0; i < x.size(); ++i) dst[i] = f(x[i], y[i]);
  return out;
}

inline Plane operator+(const Plane& a, const Plane& b) {
  return zip(a, b, [](double x, double y) { return x + y; });
}
inline Plane operator-(const Plane& a, const Plane& b) {
  return zip(a, b, [](double x, double y) { return x - y; });
}
inline Plane operator*(const Plane& a, const Plane& b) {
  return zip(a, b, [](double x, double y) { return x * y; });
}
inline Plane operator*(const Plane& a, double s) {
  return map(a, [s](double x) { return x * s; });
}
inline Plane operator*(double s, const Plane& a) { return a * s; }

inline double sum(const Plane& a) {
  auto d = a.data();
  return std::accumulate(d.begin(), d.end(), 0.0);
}

inline double mean(const Plane& a) {
  require(!a.empty(), ErrorKind::invalid_argument, "mean of empty plane");
  return sum(a) / static_cast<double>(a.size());
}

inline double min_value(const Plane& a) {
  auto d = a.data();
  return *std::min_element(d.begin(), d.end());
}

inline double max_value(const Plane& a) {
  auto d = a.data();
  return *std::max_element(d.begin(), d.end());
}

/// (2xy + c) / (x^2 + y^2 + c), the similarity kernel shared by most FR metrics.
inline Plane similarity_map(const Plane& a, const Plane& b, double c) {
  return zip(a, b, [c](double x, double y) { return (2.0 * x * y + c) / (x * x + y * y + c); });
}

/// sum(values * weights) / sum(weights); falls back to the plain mean when
/// the weights vanish everywhere (featureless inputs).
inline double weighted_mean(const Plane& values, const Plane& weights) {
  require(values.same_shape(weights), ErrorKind::dimension_mismatch, "plane shapes differ");
  double num = 0.0;
  double den = 0.0;
  auto v = values.data();
  auto w = weights.data();
  for (std::size_t i = 0; i < v.size(); ++i) {
    num += v[i] * w[i];
    den += w[i];
  }
  if (den <= 0.0) return mean(values);
  return num / den;
}

inline Plane scaled(const Plane& a, double s) { return a * s; }

}  // namespace iqa
