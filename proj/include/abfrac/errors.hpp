#pragma once

#include <stdexcept>
#include <string>

namespace abfrac {

/// Argument outside the mathematical domain of an operation (x <= 0 for
/// gamma, alpha = 1 for a derivative operator, tau outside [a, b], ...).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// An iterative evaluation (series, asymptotic expansion) did not reach its
/// tolerance within the allowed number of terms.
class ConvergenceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Adaptive quadrature exhausted its subdivision budget with the error
/// estimate still above tolerance.
class ToleranceNotMet : public std::runtime_error {
 public:
  ToleranceNotMet(const std::string& what, double estimate, double tolerance)
      : std::runtime_error(what), estimate_(estimate), tolerance_(tolerance) {}

  double estimate() const noexcept { return estimate_; }
  double tolerance() const noexcept { return tolerance_; }

 private:
  double estimate_;
  double tolerance_;
};

/// A theorem was asked about a function whose certified metadata does not
/// satisfy the theorem's hypothesis.
class HypothesisUnmet : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Invalid user-facing input: unknown names, malformed config values.
class ConfigError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

}  // namespace abfrac
