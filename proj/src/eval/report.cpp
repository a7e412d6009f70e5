#include <charconv>
#include <cmath>
#include <iomanip>
#include <ostream>
#include <string>

#include "iqa/eval.hpp"

namespace iqa::eval {
namespace {

std::string fixed(double v, int precision) {
  if (!std::isfinite(v)) return std::isnan(v) ? "nan" : (v > 0 ? "inf" : "-inf");
  char buf[64];
  const auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), v, std::chars_format::fixed, precision);
  return std::string(buf, ptr);
}

}  // namespace

std::string format_number(double v) {
  if (!std::isfinite(v)) return std::isnan(v) ? "nan" : (v > 0 ? "inf" : "-inf");
  char buf[64];
  const auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), v);
  std::string s(buf, ptr);
  if (s.find_first_of(".e") == std::string::npos) s += ".0";
  return s;
}

void write_correlation_csv(std::ostream& out, const CorrelationReport& report) {
  out << "metric,srcc,krcc,plcc,n,seconds\n";
  for (const auto& r : report.rows) {
    out << r.metric << ',' << format_number(r.srcc) << ',' << format_number(r.krcc) << ','
        << format_number(r.plcc) << ',' << r.n << ',' << format_number(r.seconds) << '\n';
  }
}

void write_correlation_text(std::ostream& out, const CorrelationReport& report) {
  out << std::left << std::setw(10) << "metric" << std::right << std::setw(8) << "SRCC" << std::setw(8)
      << "KRCC" << std::setw(8) << "PLCC" << std::setw(7) << "n" << std::setw(8) << "skipped"
      << std::setw(11) << "seconds" << '\n';
  for (const auto& r : report.rows) {
    out << std::left << std::setw(10) << r.metric << std::right << std::setw(8) << fixed(r.srcc, 4)
        << std::setw(8) << fixed(r.krcc, 4) << std::setw(8) << fixed(r.plcc, 4) << std::setw(7) << r.n
        << std::setw(8) << r.skipped << std::setw(11) << fixed(r.seconds, 3) << '\n';
  }
}

void write_bench_csv(std::ostream& out, const BenchReport& report) {
  out << "metric,seconds_median,srcc\n";
  for (const auto& r : report.rows) {
    out << r.metric << ',' << format_number(r.median_seconds) << ',' << format_number(r.srcc) << '\n';
  }
}

void write_bench_text(std::ostream& out, const BenchReport& report) {
  out << std::left << std::setw(10) << "metric" << std::right << std::setw(12) << "mean [ms]"
      << std::setw(13) << "median [ms]" << std::setw(10) << "min [ms]" << std::setw(6) << "reps"
      << std::setw(8) << "SRCC" << '\n';
  for (const auto& r : report.rows) {
    out << std::left << std::setw(10) << r.metric << std::right << std::setw(12)
        << fixed(1e3 * r.mean_seconds, 3) << std::setw(13) << fixed(1e3 * r.median_seconds, 3)
        << std::setw(10) << fixed(1e3 * r.min_seconds, 3) << std::setw(6) << r.repetitions
        << std::setw(8) << fixed(r.srcc, 4) << '\n';
  }
}

}  // namespace iqa::eval
