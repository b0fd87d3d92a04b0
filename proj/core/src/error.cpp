#include "eigendeg/error.hpp"

namespace eigendeg {

const char* error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::kInvalidVertex:
      return "InvalidVertex";
    case ErrorCode::kSelfLoop:
      return "SelfLoop";
    case ErrorCode::kInvalidFamilyParams:
      return "InvalidFamilyParams";
    case ErrorCode::kEnumerationTooLarge:
      return "EnumerationTooLarge";
    case ErrorCode::kMalformedGraph6:
      return "MalformedGraph6";
    case ErrorCode::kParseError:
      return "ParseError";
    case ErrorCode::kNonConvergence:
      return "NonConvergence";
    case ErrorCode::kZeroVector:
      return "ZeroVector";
    case ErrorCode::kInsufficientGrid:
      return "InsufficientGrid";
    case ErrorCode::kInvalidArgument:
      return "InvalidArgument";
  }
  return "Unknown";
}

Error::Error(ErrorCode code, const std::string& message)
    : std::runtime_error(std::string(error_code_name(code)) + ": " + message),
      code_(code),
      detail_(message) {}

ParseError::ParseError(std::size_t line, const std::string& message)
    : Error(ErrorCode::kParseError,
            "line " + std::to_string(line) + ": " + message),
      line_(line) {}

NonConvergence::NonConvergence(double residual, int sweeps,
                               const std::string& context)
    : Error(ErrorCode::kNonConvergence,
            (context.empty() ? std::string() : context + ": ") +
                "no convergence after " + std::to_string(sweeps) +
                " sweeps (residual " + std::to_string(residual) + ")"),
      residual_(residual),
      sweeps_(sweeps) {}

}  // namespace eigendeg
