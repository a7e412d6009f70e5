#include <charconv>
#include <cmath>
#include <fstream>
#include <istream>
#include <ostream>
#include <string>

#include "iqa/error.hpp"
#include "iqa/eval.hpp"

namespace iqa::eval {
namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
  return s;
}

std::vector<std::string_view> split_csv(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  while (true) {
    const std::size_t comma = line.find(',', start);
    if (comma == std::string_view::npos) {
      out.push_back(trim(line.substr(start)));
      return out;
    }
    out.push_back(trim(line.substr(start, comma - start)));
    start = comma + 1;
  }
}

[[noreturn]] void bad_line(int line, const std::string& what) {
  fail(ErrorKind::parse_error, "manifest line " + std::to_string(line) + ": " + what);
}

std::filesystem::path resolve(std::string_view p, const std::filesystem::path& base) {
  std::filesystem::path path{std::string(p)};
  if (path.is_relative() && !base.empty()) path = base / path;
  return path;
}

}  // namespace

DatasetManifest read_manifest(std::istream& in, const std::filesystem::path& base_dir) {
  DatasetManifest manifest;
  std::string raw;
  int line_no = 0;
  bool header_seen = false;
  while (std::getline(in, raw)) {
    ++line_no;
    std::string_view line = trim(raw);
    if (line_no == 1 && line.size() >= 3 && static_cast<unsigned char>(line[0]) == 0xEF) {
      line.remove_prefix(3);  // UTF-8 byte order mark
    }
    if (line.empty()) continue;
    if (line.front() == '#') {
      const auto colon = line.find(':');
      if (!header_seen && colon != std::string_view::npos &&
          trim(line.substr(1, colon - 1)) == "polarity") {
        const auto value = trim(line.substr(colon + 1));
        if (value == "mos") {
          manifest.polarity = Polarity::higher_is_better;
        } else if (value == "dmos") {
          manifest.polarity = Polarity::lower_is_better;
        } else {
          bad_line(line_no, "polarity must be mos or dmos");
        }
      }
      continue;
    }
    const auto fields = split_csv(line);
    if (!header_seen) {
      if (fields.size() != 3 || fields[0] != "dist" || fields[1] != "ref" || fields[2] != "score") {
        bad_line(line_no, "expected header 'dist,ref,score'");
      }
      header_seen = true;
      continue;
    }
    if (fields.size() != 3) bad_line(line_no, "expected 3 fields");
    if (fields[0].empty()) bad_line(line_no, "empty dist path");
    ManifestRecord record;
    record.line = line_no;
    record.dist = resolve(fields[0], base_dir);
    if (!fields[1].empty()) record.ref = resolve(fields[1], base_dir);
    const auto s = fields[2];
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), record.score);
    if (s.empty() || ec != std::errc() || ptr != s.data() + s.size() || !std::isfinite(record.score)) {
      bad_line(line_no, "score is not a finite number");
    }
    manifest.records.push_back(std::move(record));
  }
  if (!header_seen) fail(ErrorKind::parse_error, "manifest is empty");
  require(manifest.records.size() >= 2, ErrorKind::parse_error, "manifest needs at least 2 records");
  return manifest;
}

DatasetManifest load_manifest(const std::filesystem::path& path) {
  std::ifstream in(path);
  require(static_cast<bool>(in), ErrorKind::unreadable_file, "cannot open manifest " + path.string());
  return read_manifest(in, path.parent_path());
}

void write_manifest(std::ostream& out, const DatasetManifest& manifest) {
  if (manifest.polarity == Polarity::lower_is_better) out << "# polarity: dmos\n";
  out << "dist,ref,score\n";
  for (const auto& r : manifest.records) {
    out << r.dist.string() << ',' << (r.ref ? r.ref->string() : std::string()) << ','
        << format_number(r.score) << '\n';
  }
}

}  // namespace iqa::eval
