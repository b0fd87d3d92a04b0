#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace eigendeg {

enum class ErrorCode {
  kInvalidVertex,
  kSelfLoop,
  kInvalidFamilyParams,
  kEnumerationTooLarge,
  kMalformedGraph6,
  kParseError,
  kNonConvergence,
  kZeroVector,
  kInsufficientGrid,
  kInvalidArgument,
};

const char* error_code_name(ErrorCode code);

// Every failure raised by the library derives from Error; callers switch on
// code() when they need to distinguish causes.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message);

  ErrorCode code() const noexcept { return code_; }
  /// Message without the error-code prefix.
  const std::string& detail() const noexcept { return detail_; }

 private:
  ErrorCode code_;
  std::string detail_;
};

class ParseError : public Error {
 public:
  ParseError(std::size_t line, const std::string& message);

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

class NonConvergence : public Error {
 public:
  NonConvergence(double residual, int sweeps, const std::string& context = {});

  double residual() const noexcept { return residual_; }
  int sweeps() const noexcept { return sweeps_; }

 private:
  double residual_;
  int sweeps_;
};

}  // namespace eigendeg
