#pragma once

#include <stdexcept>
#include <string>

namespace relgl {

enum class ErrorKind {
  invalid_parameter,
  invalid_ideal,
  invalid_pair,
  invalid_position,
  invalid_input,
  cap_exceeded,
  hypothesis_violated,
  config_error,
};

inline const char* to_string(ErrorKind k) {
  switch (k) {
    case ErrorKind::invalid_parameter: return "invalid-parameter";
    case ErrorKind::invalid_ideal: return "invalid-ideal";
    case ErrorKind::invalid_pair: return "invalid-pair";
    case ErrorKind::invalid_position: return "invalid-position";
    case ErrorKind::invalid_input: return "invalid-input";
    case ErrorKind::cap_exceeded: return "refused-cap";
    case ErrorKind::hypothesis_violated: return "hypothesis-violated";
    case ErrorKind::config_error: return "config-error";
  }
  return "unknown";
}

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& what) { throw Error(kind, what); }

}  // namespace relgl
