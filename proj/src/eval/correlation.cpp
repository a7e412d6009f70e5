#include <algorithm>
#include <cmath>
#include <numeric>

#include "iqa/error.hpp"
#include "iqa/eval.hpp"

namespace iqa::eval {
namespace {

void check_pair(std::span<const double> x, std::span<const double> y) {
  require(x.size() == y.size(), ErrorKind::dimension_mismatch, "correlation inputs differ in length");
  require(x.size() >= 3, ErrorKind::invalid_argument, "correlation needs at least 3 samples");
  for (std::size_t i = 0; i < x.size(); ++i) {
    require(std::isfinite(x[i]) && std::isfinite(y[i]), ErrorKind::numerical,
            "correlation input is not finite");
  }
}

double pearson(std::span<const double> x, std::span<const double> y) {
  const double n = static_cast<double>(x.size());
  const double mx = std::accumulate(x.begin(), x.end(), 0.0) / n;
  const double my = std::accumulate(y.begin(), y.end(), 0.0) / n;
  double sxy = 0.0, sxx = 0.0, syy = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    const double dx = x[i] - mx;
    const double dy = y[i] - my;
    sxy += dx * dy;
    sxx += dx * dx;
    syy += dy * dy;
  }
  require(sxx > 0.0 && syy > 0.0, ErrorKind::degenerate_input,
          "correlation undefined for a constant vector");
  return std::clamp(sxy / std::sqrt(sxx * syy), -1.0, 1.0);
}

}  // namespace

std::vector<double> rank(std::span<const double> values) {
  const std::size_t n = values.size();
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return values[a] < values[b]; });
  std::vector<double> ranks(n);
  std::size_t i = 0;
  while (i < n) {
    std::size_t j = i + 1;
    while (j < n && values[order[j]] == values[order[i]]) ++j;
    // Positions i..j-1 hold ranks i+1..j.
    const double shared = 0.5 * static_cast<double>(i + 1 + j);
    for (std::size_t k = i; k < j; ++k) ranks[order[k]] = shared;
    i = j;
  }
  return ranks;
}

bool has_ties(std::span<const double> values) {
  std::vector<double> sorted(values.begin(), values.end());
  std::sort(sorted.begin(), sorted.end());
  return std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end();
}

double srcc_closed_form(std::span<const double> x, std::span<const double> y) {
  check_pair(x, y);
  require(!has_ties(x) && !has_ties(y), ErrorKind::invalid_argument,
          "closed-form SRCC requires tie-free inputs");
  const auto rx = rank(x);
  const auto ry = rank(y);
  double d2 = 0.0;
  for (std::size_t i = 0; i < rx.size(); ++i) d2 += (rx[i] - ry[i]) * (rx[i] - ry[i]);
  const double n = static_cast<double>(x.size());
  return 1.0 - 6.0 * d2 / (n * (n * n - 1.0));
}

double srcc_rank_pearson(std::span<const double> x, std::span<const double> y) {
  check_pair(x, y);
  const auto rx = rank(x);
  const auto ry = rank(y);
  return pearson(rx, ry);
}

double srcc(std::span<const double> x, std::span<const double> y) {
  check_pair(x, y);
  if (has_ties(x) || has_ties(y)) return srcc_rank_pearson(x, y);
  return srcc_closed_form(x, y);
}

double krcc(std::span<const double> x, std::span<const double> y) {
  check_pair(x, y);
  const std::size_t n = x.size();
  double concordant = 0.0, discordant = 0.0, tied_x = 0.0, tied_y = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      const double dx = x[i] - x[j];
      const double dy = y[i] - y[j];
      if (dx == 0.0) tied_x += 1.0;
      if (dy == 0.0) tied_y += 1.0;
      if (dx == 0.0 || dy == 0.0) continue;
      if ((dx > 0.0) == (dy > 0.0)) {
        concordant += 1.0;
      } else {
        discordant += 1.0;
      }
    }
  }
  const double pairs = 0.5 * static_cast<double>(n) * static_cast<double>(n - 1);
  const double denom = std::sqrt((pairs - tied_x) * (pairs - tied_y));
  require(denom > 0.0, ErrorKind::degenerate_input, "Kendall tau undefined for a constant vector");
  return (concordant - discordant) / denom;
}

double plcc(std::span<const double> x, std::span<const double> y) {
  check_pair(x, y);
  return pearson(x, y);
}

}  // namespace iqa::eval
