#pragma once

#include <stdexcept>
#include <string>

namespace cbound {

enum class ErrorCode {
  InvalidArgument = 1,  // caller passed a value outside the documented domain
  DomainError,          // inputs are individually valid but jointly unusable
  RegimeError,          // model evaluated outside its validity regime
  ParseError,           // malformed config or CSV input
  IoError,              // filesystem failure
  NumericError,         // computation failed to produce a finite result
  MissingContext,       // conversion or operation lacks required context
};

// All library failures surface as this exception. line/column are >0 only
// for parse errors that can point at the offending input location.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message, int line = 0, int column = 0)
      : std::runtime_error(message), code_(code), line_(line), column_(column) {}

  ErrorCode code() const noexcept { return code_; }
  int line() const noexcept { return line_; }
  int column() const noexcept { return column_; }

 private:
  ErrorCode code_;
  int line_;
  int column_;
};

inline const char* error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::InvalidArgument: return "invalid_argument";
    case ErrorCode::DomainError: return "domain_error";
    case ErrorCode::RegimeError: return "regime_error";
    case ErrorCode::ParseError: return "parse_error";
    case ErrorCode::IoError: return "io_error";
    case ErrorCode::NumericError: return "numeric_error";
    case ErrorCode::MissingContext: return "missing_context";
  }
  return "unknown";
}

}  // namespace cbound
