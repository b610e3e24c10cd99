#include "sweephull/errors.hpp"

namespace sweephull {

const char* to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::TooFewPoints: return "TooFewPoints";
    case ErrorCode::AllCollinear: return "AllCollinear";
    case ErrorCode::DuplicatePoints: return "DuplicatePoints";
    case ErrorCode::CollinearInput: return "CollinearInput";
    case ErrorCode::NotAdjacent: return "NotAdjacent";
    case ErrorCode::NoVisibleEdge: return "NoVisibleEdge";
    case ErrorCode::DegenerateCocircular: return "DegenerateCocircular";
    case ErrorCode::MeshMismatch: return "MeshMismatch";
    case ErrorCode::FileRead: return "FileRead";
    case ErrorCode::FileWrite: return "FileWrite";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::UsageError: return "UsageError";
  }
  return "Unknown";
}

void fail(ErrorCode code, const std::string& message) { throw Error(code, message); }

void fail(ErrorCode code, const std::string& message, std::int32_t index_a,
          std::int32_t index_b) {
  Error e(code, message);
  e.index_a = index_a;
  e.index_b = index_b;
  throw e;
}

}  // namespace sweephull
