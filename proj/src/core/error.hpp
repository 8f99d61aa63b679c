#pragma once

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace kneexo {

enum class ErrorCode {
  invalid_argument,
  domain,
  parse,
  validation,
  singular,
  no_convergence,
  inconsistent,
  ill_conditioned,
  degenerate,
  io,
};

inline const char* to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::invalid_argument: return "invalid_argument";
    case ErrorCode::domain:           return "domain";
    case ErrorCode::parse:            return "parse";
    case ErrorCode::validation:       return "validation";
    case ErrorCode::singular:         return "singular";
    case ErrorCode::no_convergence:   return "no_convergence";
    case ErrorCode::inconsistent:     return "inconsistent";
    case ErrorCode::ill_conditioned:  return "ill_conditioned";
    case ErrorCode::degenerate:       return "degenerate";
    case ErrorCode::io:               return "io";
  }
  return "unknown";
}

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}
  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

// Carries the full list of violations so callers can report all of them,
// not just the first.
class ValidationError : public Error {
 public:
  explicit ValidationError(std::vector<std::string> violations)
      : Error(ErrorCode::validation, join(violations)),
        violations_(std::move(violations)) {}
  const std::vector<std::string>& violations() const noexcept { return violations_; }

 private:
  static std::string join(const std::vector<std::string>& vs) {
    std::string out = "config validation failed:";
    for (const auto& v : vs) {
      out += "\n  - ";
      out += v;
    }
    return out;
  }
  std::vector<std::string> violations_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& message) {
  throw Error(code, message);
}

}  // namespace kneexo
