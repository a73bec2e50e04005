#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "hyperjulia/disk.hpp"

namespace hyperjulia {

struct Tolerances {
  double check = 1e-9;
  double eq = 1e-7;
};

using InputValue = std::variant<double, cplx, std::string, std::vector<cplx>>;

struct VerificationReport {
  std::string name;
  double lhs = 0.0;
  double rhs = 0.0;
  double gap = 0.0;
  bool holds = false;
  bool equality = false;
  std::optional<bool> equality_expected;
  std::vector<std::pair<std::string, InputValue>> inputs;
  Tolerances tolerances;
  double slack = 0.0;  // extra allowance from estimated (radial) inputs
  std::string note;

  /// Holds, and is sharp wherever the structure forces equality. An observed equality in a
  /// strict case is reported through equality/equality_expected but is not a failure: a gap
  /// below tol_eq cannot be told apart from zero at a single point.
  bool consistent() const { return holds && (equality_expected != true || equality); }
  bool unexpected_equality() const { return equality && equality_expected == false; }

  VerificationReport& with(std::string key, InputValue v) {
    inputs.emplace_back(std::move(key), std::move(v));
    return *this;
  }
};

/// Classifies lhs <= rhs: holds iff gap >= -(tol_check + slack),
/// equality iff |gap| <= tol_eq max(1,|rhs|) + slack.
inline VerificationReport make_report(std::string name, double lhs, double rhs, std::optional<bool> expected,
                                      const Tolerances& tol, double slack = 0.0) {
  VerificationReport r;
  r.name = std::move(name);
  r.lhs = lhs;
  r.rhs = rhs;
  r.gap = rhs - lhs;
  r.holds = std::isfinite(r.gap) && r.gap >= -(tol.check + slack);
  r.equality = std::isfinite(r.gap) && std::abs(r.gap) <= tol.eq * std::max(1.0, std::abs(rhs)) + slack;
  r.equality_expected = expected;
  r.tolerances = tol;
  r.slack = slack;
  return r;
}

}  // namespace hyperjulia
