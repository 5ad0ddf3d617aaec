#pragma once

#include <stdexcept>
#include <string>

namespace zssusy {

// Precondition violations use std::invalid_argument directly.

class GridMismatch : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// An operator identity or residual check exceeded its tolerance.
class VerificationFailure : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Adaptive integration could not proceed (step underflow, step budget).
class IntegrationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// The intertwiner chain mapped the input state to (numerically) zero.
class ChainAnnihilated : public std::runtime_error {
 public:
  ChainAnnihilated(const std::string& what, double norm_ratio)
      : std::runtime_error(what), norm_ratio_(norm_ratio) {}
  double norm_ratio() const noexcept { return norm_ratio_; }

 private:
  double norm_ratio_;
};

}  // namespace zssusy
