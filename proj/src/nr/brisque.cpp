#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>

#include "iqa/color.hpp"
#include "iqa/error.hpp"
#include "iqa/filter.hpp"
#include "iqa/nr_metrics.hpp"
#include "iqa/plane_ops.hpp"
#include "iqa/resize.hpp"

namespace iqa::nr {
namespace {

constexpr std::string_view kModelHeader = "brisque-svr v1";
constexpr int kGridSize = 9801;  // alpha = 0.2, 0.201, ..., 10.0

double grid_alpha(int i) { return 0.2 + 0.001 * i; }

// Index of the table entry closest to `target`; the first (smallest alpha)
// wins on ties.
int closest(const std::vector<double>& table, double target) {
  int best = 0;
  double best_diff = std::abs(table[0] - target);
  for (int i = 1; i < static_cast<int>(table.size()); ++i) {
    const double d = std::abs(table[i] - target);
    if (d < best_diff) {
      best_diff = d;
      best = i;
    }
  }
  return best;
}

const std::vector<double>& ggd_table() {
  static const std::vector<double> table = [] {
    std::vector<double> t(kGridSize);
    for (int i = 0; i < kGridSize; ++i) {
      const double a = grid_alpha(i);
      t[i] = std::exp(std::lgamma(1.0 / a) + std::lgamma(3.0 / a) - 2.0 * std::lgamma(2.0 / a));
    }
    return t;
  }();
  return table;
}

const std::vector<double>& aggd_table() {
  static const std::vector<double> table = [] {
    std::vector<double> t(kGridSize);
    for (int i = 0; i < kGridSize; ++i) {
      const double a = grid_alpha(i);
      t[i] = std::exp(2.0 * std::lgamma(2.0 / a) - std::lgamma(1.0 / a) - std::lgamma(3.0 / a));
    }
    return t;
  }();
  return table;
}

// x * x shifted circularly by (dr, dc), i.e. out(r, c) = x(r, c) x(r - dr, c - dc).
Plane neighbour_product(const Plane& x, int dr, int dc) {
  const int h = x.height();
  const int w = x.width();
  Plane out(h, w);
  for (int r = 0; r < h; ++r) {
    const int sr = ((r - dr) % h + h) % h;
    for (int c = 0; c < w; ++c) {
      const int sc = ((c - dc) % w + w) % w;
      out(r, c) = x(r, c) * x(sr, sc);
    }
  }
  return out;
}

void append_scale(const Plane& luma255, std::vector<double>& out) {
  const Plane mscn = mscn_coefficients(luma255);
  const GgdFit g = fit_ggd(mscn);
  out.push_back(g.alpha);
  out.push_back(g.variance);
  constexpr int kShifts[4][2] = {{0, 1}, {1, 0}, {1, 1}, {-1, 1}};
  for (const auto& s : kShifts) {
    const AggdFit a = fit_aggd(neighbour_product(mscn, s[0], s[1]));
    out.push_back(a.alpha);
    out.push_back(a.mean);
    out.push_back(a.left_variance);
    out.push_back(a.right_variance);
  }
}

double parse_double(std::string_view token, int line) {
  double v = 0.0;
  const auto* end = token.data() + token.size();
  const auto [ptr, ec] = std::from_chars(token.data(), end, v);
  if (ec != std::errc() || ptr != end || !std::isfinite(v)) {
    fail(ErrorKind::parse_error,
         "brisque model line " + std::to_string(line) + ": bad number '" + std::string(token) + "'");
  }
  return v;
}

std::vector<std::string> split(const std::string& line) {
  std::vector<std::string> tokens;
  std::istringstream ss(line);
  ss.imbue(std::locale::classic());
  std::string t;
  while (ss >> t) tokens.push_back(t);
  return tokens;
}

void write_double(std::ostream& out, double v) {
  char buf[64];
  const auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), v);
  out.write(buf, ptr - buf);
}

}  // namespace

Plane mscn_coefficients(const Plane& luma255) {
  static const Kernel2D window = Kernel2D::gaussian(7, 7.0 / 6.0);
  const Plane mu = convolve2d(luma255, window, Padding::replicate);
  const Plane second = convolve2d(luma255 * luma255, window, Padding::replicate);
  Plane out(luma255.height(), luma255.width());
  for (std::size_t i = 0; i < out.size(); ++i) {
    const double m = mu.data()[i];
    const double sigma = std::sqrt(std::abs(second.data()[i] - m * m));
    out.data()[i] = (luma255.data()[i] - m) / (sigma + 1.0);
  }
  return out;
}

GgdFit fit_ggd(const Plane& x) {
  require(!x.empty(), ErrorKind::invalid_argument, "ggd fit needs samples");
  double sq = 0.0;
  double ab = 0.0;
  for (double v : x.data()) {
    sq += v * v;
    ab += std::abs(v);
  }
  const double n = static_cast<double>(x.size());
  sq /= n;
  ab /= n;
  // MSCN samples are O(1) for any textured input; constant planes leave only
  // rounding residue from the local mean.
  require(sq > 1e-20, ErrorKind::degenerate_input, "ggd fit on zero-variance input");
  const double rho = sq / (ab * ab);
  return {grid_alpha(closest(ggd_table(), rho)), sq};
}

AggdFit fit_aggd(const Plane& x) {
  require(!x.empty(), ErrorKind::invalid_argument, "aggd fit needs samples");
  double left = 0.0, right = 0.0, ab = 0.0, sq = 0.0;
  std::size_t n_left = 0, n_right = 0;
  for (double v : x.data()) {
    if (v < 0.0) {
      left += v * v;
      ++n_left;
    } else if (v > 0.0) {
      right += v * v;
      ++n_right;
    }
    ab += std::abs(v);
    sq += v * v;
  }
  require(n_left > 0 && n_right > 0, ErrorKind::degenerate_input,
          "aggd fit needs both negative and positive samples");
  const double n = static_cast<double>(x.size());
  const double sigma_l = std::sqrt(left / n_left);
  const double sigma_r = std::sqrt(right / n_right);
  const double g = sigma_l / sigma_r;
  const double r_hat = (ab / n) * (ab / n) / (sq / n);
  const double r_norm = r_hat * (g * g * g + 1.0) * (g + 1.0) / ((g * g + 1.0) * (g * g + 1.0));
  const double alpha = grid_alpha(closest(aggd_table(), r_norm));
  const double mean = (sigma_r - sigma_l) *
      std::exp(std::lgamma(2.0 / alpha) - 0.5 * (std::lgamma(1.0 / alpha) + std::lgamma(3.0 / alpha)));
  return {alpha, mean, sigma_l * sigma_l, sigma_r * sigma_r};
}

BrisqueFeatures brisque_features(const Image& image) {
  require(image.height() >= kBrisqueMinSide && image.width() >= kBrisqueMinSide,
          ErrorKind::image_too_small, "brisque needs at least 32x32 pixels");
  Plane luma = luma_plane(image) * 255.0;
  if (image.channels() == 3) luma = map(luma, [](double v) { return std::nearbyint(v); });

  std::vector<double> values;
  values.reserve(kBrisqueFeatureCount);
  append_scale(luma, values);
  append_scale(resize_bicubic(luma, luma.height() / 2, luma.width() / 2), values);

  BrisqueFeatures out{};
  std::copy(values.begin(), values.end(), out.begin());
  return out;
}

void BrisqueModel::validate() const {
  require(gamma > 0.0, ErrorKind::parse_error, "brisque model gamma must be positive");
  require(!ranges.empty(), ErrorKind::parse_error, "brisque model has no feature ranges");
  for (std::size_t i = 0; i < ranges.size(); ++i) {
    require(ranges[i][0] < ranges[i][1], ErrorKind::parse_error,
            "brisque model range " + std::to_string(i) + " has min >= max");
  }
  require(coefficients.size() == support_vectors.size(), ErrorKind::parse_error,
          "brisque model coefficient and support-vector counts differ");
  for (const auto& sv : support_vectors) {
    require(sv.size() == ranges.size(), ErrorKind::parse_error,
            "brisque support vector length differs from the feature count");
  }
}

BrisqueModel read_brisque_model(std::istream& in) {
  BrisqueModel model;
  std::string line;
  int line_no = 0;
  auto next = [&]() -> bool {
    while (std::getline(in, line)) {
      ++line_no;
      if (!line.empty() && line.back() == '\r') line.pop_back();
      if (line.find_first_not_of(" \t") != std::string::npos) return true;
    }
    return false;
  };
  auto bad = [&](const std::string& what) {
    fail(ErrorKind::parse_error, "brisque model line " + std::to_string(line_no) + ": " + what);
  };

  if (!next() || split(line) != split(std::string(kModelHeader))) bad("expected 'brisque-svr v1'");
  if (!next()) bad("missing gamma/rho line");
  auto tokens = split(line);
  if (tokens.size() != 4 || tokens[0] != "gamma" || tokens[2] != "rho") bad("expected 'gamma <g> rho <r>'");
  model.gamma = parse_double(tokens[1], line_no);
  model.rho = parse_double(tokens[3], line_no);

  for (int i = 0; i < kBrisqueFeatureCount; ++i) {
    if (!next()) bad("expected 36 range lines");
    tokens = split(line);
    if (tokens.size() != 3 || tokens[0] != "range") bad("expected 'range <min> <max>'");
    model.ranges.push_back({parse_double(tokens[1], line_no), parse_double(tokens[2], line_no)});
  }
  while (next()) {
    tokens = split(line);
    if (tokens.size() != 1 + kBrisqueFeatureCount) bad("support vector needs 37 numbers");
    model.coefficients.push_back(parse_double(tokens[0], line_no));
    std::vector<double> sv;
    for (std::size_t j = 1; j < tokens.size(); ++j) sv.push_back(parse_double(tokens[j], line_no));
    model.support_vectors.push_back(std::move(sv));
  }
  model.validate();
  return model;
}

BrisqueModel load_brisque_model(const std::filesystem::path& path) {
  std::ifstream in(path);
  require(static_cast<bool>(in), ErrorKind::unreadable_file,
          "cannot open brisque model " + path.string());
  return read_brisque_model(in);
}

void write_brisque_model(std::ostream& out, const BrisqueModel& model) {
  model.validate();
  out << kModelHeader << '\n' << "gamma ";
  write_double(out, model.gamma);
  out << " rho ";
  write_double(out, model.rho);
  out << '\n';
  for (const auto& r : model.ranges) {
    out << "range ";
    write_double(out, r[0]);
    out << ' ';
    write_double(out, r[1]);
    out << '\n';
  }
  for (std::size_t i = 0; i < model.coefficients.size(); ++i) {
    write_double(out, model.coefficients[i]);
    for (double v : model.support_vectors[i]) {
      out << ' ';
      write_double(out, v);
    }
    out << '\n';
  }
}

double brisque_score(const std::vector<double>& features, const BrisqueModel& model) {
  require(features.size() == model.ranges.size(), ErrorKind::dimension_mismatch,
          "feature count does not match the brisque model");
  std::vector<double> scaled(features.size());
  for (std::size_t j = 0; j < features.size(); ++j) {
    const auto& [lo, hi] = model.ranges[j];
    scaled[j] = -1.0 + 2.0 * (features[j] - lo) / (hi - lo);
  }
  double score = 0.0;
  for (std::size_t i = 0; i < model.support_vectors.size(); ++i) {
    const auto& sv = model.support_vectors[i];
    require(sv.size() == scaled.size(), ErrorKind::dimension_mismatch,
            "support vector length does not match the features");
    double d2 = 0.0;
    for (std::size_t j = 0; j < scaled.size(); ++j) d2 += (scaled[j] - sv[j]) * (scaled[j] - sv[j]);
    score += model.coefficients[i] * std::exp(-model.gamma * d2);
  }
  return score - model.rho;
}

double brisque_score(const BrisqueFeatures& features, const BrisqueModel& model) {
  return brisque_score(std::vector<double>(features.begin(), features.end()), model);
}

}  // namespace iqa::nr
