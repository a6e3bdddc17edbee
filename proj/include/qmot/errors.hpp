#pragma once

#include <stdexcept>
#include <string>

namespace qmot {

enum class ErrorCode {
  Parse,                 // malformed input file
  NotHermitian,          // symmetry defect above tolerance
  NotPositiveDefinite,   // eigenvalue at or below the PD floor
  TraceMismatch,         // balanced-mode trace precondition violated
  DimensionMismatch,
  InvalidArgument,       // bad flag or parameter value
  Internal,
};

inline const char* errorCodeName(ErrorCode code) {
  switch (code) {
    case ErrorCode::Parse: return "E_PARSE";
    case ErrorCode::NotHermitian: return "E_HERM";
    case ErrorCode::NotPositiveDefinite: return "E_PD";
    case ErrorCode::TraceMismatch: return "E_TRACE";
    case ErrorCode::DimensionMismatch: return "E_DIM";
    case ErrorCode::InvalidArgument: return "E_ARGS";
    case ErrorCode::Internal: return "E_INTERNAL";
  }
  return "E_INTERNAL";
}

/// Library-wide exception type; the CLI maps it onto structured error objects.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message, std::string context = {})
      : std::runtime_error(message), code_(code), context_(std::move(context)) {}

  ErrorCode code() const { return code_; }
  const std::string& context() const { return context_; }

 private:
  ErrorCode code_;
  std::string context_;
};

}  // namespace qmot
