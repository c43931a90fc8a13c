#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace armine {

enum class ErrorCode {
  kInvalidItemToken,
  kIoError,
  kMalformedRecord,
  kUnknownItem,
  kNonDisjointItemsets,
  kEmptyItemset,
  kInvalidThreshold,
  kInvalidConfig,
  kInternalInvariantViolation,
};

std::string_view to_string(ErrorCode code) noexcept;

/// Single exception type for the library. The code says what went wrong;
/// `line()` is set for record-level parse failures (1-based).
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message,
        std::optional<std::size_t> line = std::nullopt);

  ErrorCode code() const noexcept { return code_; }
  std::optional<std::size_t> line() const noexcept { return line_; }

  /// True for errors caused by the input data rather than by the caller.
  bool is_input_error() const noexcept;

 private:
  ErrorCode code_;
  std::optional<std::size_t> line_;
};

}  // namespace armine
