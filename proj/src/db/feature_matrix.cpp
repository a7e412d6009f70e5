#include <array>
#include <bit>
#include <charconv>
#include <cmath>
#include <cstring>
#include <fstream>
#include <istream>
#include <ostream>
#include <string>

#include "iqa/db_metrics.hpp"
#include "iqa/error.hpp"

namespace iqa::db {
namespace {

static_assert(std::endian::native == std::endian::little, "FMX1 I/O assumes a little-endian host");

constexpr char kMagic[4] = {'F', 'M', 'X', '1'};

std::uint32_t read_u32(std::istream& in) {
  std::array<unsigned char, 4> b{};
  in.read(reinterpret_cast<char*>(b.data()), 4);
  require(static_cast<bool>(in), ErrorKind::unreadable_file, "truncated FMX1 header");
  return b[0] | (b[1] << 8) | (b[2] << 16) | (static_cast<std::uint32_t>(b[3]) << 24);
}

void write_u32(std::ostream& out, std::uint32_t v) {
  const unsigned char b[4] = {static_cast<unsigned char>(v), static_cast<unsigned char>(v >> 8),
                              static_cast<unsigned char>(v >> 16), static_cast<unsigned char>(v >> 24)};
  out.write(reinterpret_cast<const char*>(b), 4);
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
  return s;
}

bool parse_row(std::string_view line, std::vector<double>& out) {
  out.clear();
  std::size_t start = 0;
  while (true) {
    const std::size_t comma = line.find(',', start);
    const std::string_view token =
        trim(line.substr(start, comma == std::string_view::npos ? std::string_view::npos : comma - start));
    double v = 0.0;
    const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), v);
    if (token.empty() || ec != std::errc() || ptr != token.data() + token.size()) return false;
    out.push_back(v);
    if (comma == std::string_view::npos) return true;
    start = comma + 1;
  }
}

}  // namespace

FeatureMatrix::FeatureMatrix(int rows, int cols)
    : FeatureMatrix(rows, cols, std::vector<double>(static_cast<std::size_t>(rows) * cols, 0.0)) {}

FeatureMatrix::FeatureMatrix(int rows, int cols, std::vector<double> values)
    : rows_(rows), cols_(cols), values_(std::move(values)) {
  require(rows >= 0 && cols >= 0, ErrorKind::invalid_argument, "negative feature matrix shape");
  require(values_.size() == static_cast<std::size_t>(rows) * cols, ErrorKind::dimension_mismatch,
          "feature matrix value count does not match its shape");
  for (double v : values_) {
    require(std::isfinite(v), ErrorKind::numerical, "feature matrix contains a non-finite value");
  }
}

std::span<const double> FeatureMatrix::row(int r) const {
  require(r >= 0 && r < rows_, ErrorKind::invalid_argument, "feature row out of range");
  return std::span<const double>(values_).subspan(static_cast<std::size_t>(r) * cols_, cols_);
}

void FeatureMatrix::append(const FeatureMatrix& other) {
  if (rows_ == 0) {
    *this = other;
    return;
  }
  if (other.rows_ == 0) return;
  require(other.cols_ == cols_, ErrorKind::dimension_mismatch, "feature dimensions differ");
  values_.insert(values_.end(), other.values_.begin(), other.values_.end());
  rows_ += other.rows_;
}

FeatureMatrix FeatureMatrix::select_rows(const std::vector<int>& indices) const {
  std::vector<double> out;
  out.reserve(indices.size() * cols_);
  for (int i : indices) {
    const auto r = row(i);
    out.insert(out.end(), r.begin(), r.end());
  }
  return FeatureMatrix(static_cast<int>(indices.size()), cols_, std::move(out));
}

FeatureMatrix read_fmx1(std::istream& in) {
  char magic[4] = {};
  in.read(magic, 4);
  require(static_cast<bool>(in) && std::memcmp(magic, kMagic, 4) == 0, ErrorKind::unsupported_format,
          "missing FMX1 magic");
  const std::uint32_t n = read_u32(in);
  const std::uint32_t d = read_u32(in);
  require(n <= (1u << 24) && d <= (1u << 24), ErrorKind::unsupported_format, "FMX1 shape too large");
  const std::size_t count = static_cast<std::size_t>(n) * d;
  std::vector<float> raw(count);
  in.read(reinterpret_cast<char*>(raw.data()), static_cast<std::streamsize>(count * sizeof(float)));
  require(static_cast<bool>(in) || count == 0, ErrorKind::unreadable_file, "truncated FMX1 payload");
  return FeatureMatrix(static_cast<int>(n), static_cast<int>(d),
                       std::vector<double>(raw.begin(), raw.end()));
}

void write_fmx1(std::ostream& out, const FeatureMatrix& m) {
  out.write(kMagic, 4);
  write_u32(out, static_cast<std::uint32_t>(m.rows()));
  write_u32(out, static_cast<std::uint32_t>(m.cols()));
  std::vector<float> raw(m.values().begin(), m.values().end());
  out.write(reinterpret_cast<const char*>(raw.data()),
            static_cast<std::streamsize>(raw.size() * sizeof(float)));
}

FeatureMatrix read_feature_csv(std::istream& in) {
  std::vector<double> values;
  std::vector<double> row;
  int cols = -1;
  int rows = 0;
  int line_no = 0;
  std::string line;
  while (std::getline(in, line)) {
    ++line_no;
    if (trim(line).empty()) continue;
    if (!parse_row(line, row)) {
      if (line_no == 1) continue;  // header
      fail(ErrorKind::parse_error, "feature CSV line " + std::to_string(line_no) + ": not numeric");
    }
    if (cols < 0) cols = static_cast<int>(row.size());
    require(static_cast<int>(row.size()) == cols, ErrorKind::parse_error,
            "feature CSV line " + std::to_string(line_no) + ": expected " + std::to_string(cols) +
                " columns");
    values.insert(values.end(), row.begin(), row.end());
    ++rows;
  }
  return FeatureMatrix(rows, std::max(cols, 0), std::move(values));
}

void write_feature_csv(std::ostream& out, const FeatureMatrix& m) {
  char buf[64];
  for (int r = 0; r < m.rows(); ++r) {
    for (int c = 0; c < m.cols(); ++c) {
      if (c) out << ',';
      const auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), m(r, c));
      out.write(buf, ptr - buf);
    }
    out << '\n';
  }
}

FeatureMatrix load_feature_matrix(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  require(static_cast<bool>(in), ErrorKind::unreadable_file, "cannot open " + path.string());
  char magic[4] = {};
  in.read(magic, 4);
  const bool binary = in.gcount() == 4 && std::memcmp(magic, kMagic, 4) == 0;
  in.clear();
  in.seekg(0);
  return binary ? read_fmx1(in) : read_feature_csv(in);
}

void save_fmx1(const std::filesystem::path& path, const FeatureMatrix& m) {
  std::ofstream out(path, std::ios::binary);
  require(static_cast<bool>(out), ErrorKind::unreadable_file, "cannot write " + path.string());
  write_fmx1(out, m);
  require(static_cast<bool>(out), ErrorKind::unreadable_file, "write failed for " + path.string());
}

}  // namespace iqa::db
