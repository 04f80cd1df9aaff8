#include "cavitybec/error.hpp"

namespace cavitybec {

std::string_view to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::InvalidParameter: return "invalid-parameter";
    case ErrorKind::NoConvergence: return "no-convergence";
    case ErrorKind::UnstableCavity: return "unstable-cavity";
    case ErrorKind::DegenerateGap: return "degenerate-gap";
    case ErrorKind::DegenerateGround: return "degenerate-ground";
    case ErrorKind::DynamicalInstability: return "dynamical-instability";
    case ErrorKind::BracketFailure: return "bracket-failure";
    case ErrorKind::MalformedConfig: return "malformed-config";
  }
  return "unknown";
}

}  // namespace cavitybec
