#include "iqa/error.hpp"

namespace iqa {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::invalid_argument: return "invalid argument";
    case ErrorKind::dimension_mismatch: return "dimension mismatch";
    case ErrorKind::image_too_small: return "image too small";
    case ErrorKind::unreadable_file: return "unreadable file";
    case ErrorKind::unsupported_format: return "unsupported format";
    case ErrorKind::parse_error: return "parse error";
    case ErrorKind::degenerate_input: return "degenerate input";
    case ErrorKind::numerical: return "numerical error";
    case ErrorKind::data_integrity: return "data integrity";
  }
  return "unknown error";
}

void fail(ErrorKind kind, const std::string& message) {
  throw Error(kind, message);
}

}  // namespace iqa
