#pragma once

#include <stdexcept>
#include <string>

namespace pflight {

/// Invalid model or algorithm parameters (non-positive rate, zero grid size, ...).
class ParameterError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Argument outside the domain on which a function is defined.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Observed positions that cannot come from a flight with the stated speed.
class InconsistentInputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A numerical routine failed to reach its tolerance. The best estimate
/// found so far is kept so callers can decide whether it is usable.
class NumericalError : public std::runtime_error {
 public:
  NumericalError(const std::string& what, double estimate, double error_estimate)
      : std::runtime_error(what), estimate_(estimate), error_estimate_(error_estimate) {}

  double estimate() const noexcept { return estimate_; }
  double error_estimate() const noexcept { return error_estimate_; }

 private:
  double estimate_;
  double error_estimate_;
};

/// Result too large for a double. Carries the exponent-scaled value
/// `scaled` such that the true result is scaled * exp(exponent).
class OverflowError : public std::overflow_error {
 public:
  OverflowError(const std::string& what, double scaled, double exponent)
      : std::overflow_error(what), scaled_(scaled), exponent_(exponent) {}

  double scaled() const noexcept { return scaled_; }
  double exponent() const noexcept { return exponent_; }

 private:
  double scaled_;
  double exponent_;
};

}  // namespace pflight
