#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace hyperjulia {

enum class ErrorKind {
  invalid_argument,   // a type invariant or precondition was violated
  pole,               // evaluation at (or numerically at) a pole
  degenerate,         // a value that must stay in the open disk reached the boundary
  automorphism,       // the input is an automorphism where a non-automorphism is required
  degree_exhaustion,  // a chain asked for more stages than the Blaschke degree allows
  deflation_residual, // synthetic division left a remainder above tolerance
  certification,      // a constructed map failed its Blaschke certificate
  root_convergence,   // the polynomial root finder did not converge
  inconclusive        // a numerical limit could not be established
};

constexpr std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::invalid_argument: return "invalid_argument";
    case ErrorKind::pole: return "pole";
    case ErrorKind::degenerate: return "degenerate";
    case ErrorKind::automorphism: return "automorphism";
    case ErrorKind::degree_exhaustion: return "degree_exhaustion";
    case ErrorKind::deflation_residual: return "deflation_residual";
    case ErrorKind::certification: return "certification";
    case ErrorKind::root_convergence: return "root_convergence";
    case ErrorKind::inconclusive: return "inconclusive";
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

inline void require(bool condition, ErrorKind kind, const std::string& what) {
  if (!condition) throw Error(kind, what);
}

}  // namespace hyperjulia
