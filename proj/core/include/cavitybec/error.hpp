#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace cavitybec {

enum class ErrorKind {
  InvalidParameter,
  NoConvergence,
  UnstableCavity,
  DegenerateGap,
  DegenerateGround,
  DynamicalInstability,
  BracketFailure,
  MalformedConfig,
};

std::string_view to_string(ErrorKind kind) noexcept;

// Every library failure is reported through this type; `kind()` lets callers
// (the sweep harness in particular) map failures onto record status flags.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace cavitybec
