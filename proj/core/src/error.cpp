#include "armine/error.hpp"

namespace armine {

std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::kInvalidItemToken: return "InvalidItemToken";
    case ErrorCode::kIoError: return "IoError";
    case ErrorCode::kMalformedRecord: return "MalformedRecord";
    case ErrorCode::kUnknownItem: return "UnknownItem";
    case ErrorCode::kNonDisjointItemsets: return "NonDisjointItemsets";
    case ErrorCode::kEmptyItemset: return "EmptyItemset";
    case ErrorCode::kInvalidThreshold: return "InvalidThreshold";
    case ErrorCode::kInvalidConfig: return "InvalidConfig";
    case ErrorCode::kInternalInvariantViolation: return "InternalInvariantViolation";
  }
  return "Unknown";
}

namespace {

std::string decorate(ErrorCode code, const std::string& message, std::optional<std::size_t> line) {
  std::string out{to_string(code)};
  if (line) out += " (line " + std::to_string(*line) + ")";
  out += ": ";
  out += message;
  return out;
}

}  // namespace

Error::Error(ErrorCode code, const std::string& message, std::optional<std::size_t> line)
    : std::runtime_error(decorate(code, message, line)), code_(code), line_(line) {}

bool Error::is_input_error() const noexcept {
  return code_ == ErrorCode::kIoError || code_ == ErrorCode::kMalformedRecord ||
         code_ == ErrorCode::kInvalidItemToken;
}

}  // namespace armine
