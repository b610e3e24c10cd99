#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace sweephull {

enum class ErrorCode {
  TooFewPoints,
  AllCollinear,
  DuplicatePoints,
  CollinearInput,
  NotAdjacent,
  NoVisibleEdge,
  DegenerateCocircular,
  MeshMismatch,
  FileRead,
  FileWrite,
  ParseError,
  UsageError,
};

const char* to_string(ErrorCode code);

/// Library error. what() carries the detail message; the stable
/// machine-greppable code is available via code().
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const { return code_; }

  /// Point indices involved, when meaningful (e.g. DuplicatePoints); -1 otherwise.
  std::int32_t index_a = -1;
  std::int32_t index_b = -1;

 private:
  ErrorCode code_;
};

[[noreturn]] void fail(ErrorCode code, const std::string& message);
[[noreturn]] void fail(ErrorCode code, const std::string& message,
                       std::int32_t index_a, std::int32_t index_b);

}  // namespace sweephull
