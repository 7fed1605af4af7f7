#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace spingap {

enum class ErrorKind {
  InvalidSpin,
  InvalidField,
  InvalidLevel,
  UnsupportedLevel,
  OutOfRange,
  InvalidConfig,
  DoubletBroken,
  NoConvergence,
  BracketFailure,
  PrecisionExhausted,
  DegenerateFit,
};

std::string_view to_string(ErrorKind kind);

/// Exception carrying a machine-readable kind alongside the message.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(std::string(to_string(kind)) + ": " + message),
        kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& message) {
  throw Error(kind, message);
}

}  // namespace spingap
