#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace youngdim {

enum class ErrorCode {
  format,       // malformed text input
  contract,     // precondition violated by the caller
  argument,     // bad argument value (empty seed list, short series, ...)
  capacity,     // configured resource bound exceeded
  consistency,  // internal arithmetic check failed
  io,
  domain,       // comparison between incomparable objects
};

inline std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::format: return "format";
    case ErrorCode::contract: return "contract";
    case ErrorCode::argument: return "argument";
    case ErrorCode::capacity: return "capacity";
    case ErrorCode::consistency: return "consistency";
    case ErrorCode::io: return "io";
    case ErrorCode::domain: return "domain";
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

[[noreturn]] inline void fail(ErrorCode code, const std::string& message) {
  throw Error(code, message);
}

}  // namespace youngdim
