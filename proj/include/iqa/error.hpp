#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace iqa {

enum class ErrorKind {
  invalid_argument,    // caller passed a parameter outside the contract
  dimension_mismatch,  // operands disagree in shape
  image_too_small,     // operand below the minimum size of an operation
  unreadable_file,     // I/O failure or corrupt file
  unsupported_format,  // readable file in a layout we do not accept
  parse_error,         // malformed text input (manifest, model, CSV)
  degenerate_input,    // input with no information (e.g. zero variance)
  numerical,           // conditioning failure or non-finite result
  data_integrity,      // too many unusable records in a dataset
};

std::string_view to_string(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(message), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

[[noreturn]] void fail(ErrorKind kind, const std::string& message);

inline void require(bool condition, ErrorKind kind, const std::string& message) {
  if (!condition) fail(kind, message);
}

}  // namespace iqa
