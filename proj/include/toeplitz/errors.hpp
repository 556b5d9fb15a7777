#pragma once

#include <complex>
#include <stdexcept>
#include <string>
#include <vector>

namespace toeplitz {

/// Argument outside the mathematical domain of an operation (z = 0, rho <= 0, ...).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Structurally unusable input: too few vertices, constant polynomial, empty subset.
class DegenerateInputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Invalid tuning parameter (offset radii, partition sizes, counts).
class ParameterError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Malformed input file (symbol or region JSON).
class FormatError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Coordinates do not fit the fixed-point frame, or regions live in different frames.
class FrameError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Root iteration failed to reach the residual target. Carries the best iterate.
class ConvergenceError : public std::runtime_error {
 public:
  ConvergenceError(const std::string& what, std::vector<std::complex<double>> best,
                   double relative_residual)
      : std::runtime_error(what), best_(std::move(best)), relative_residual_(relative_residual) {}

  const std::vector<std::complex<double>>& best_iterate() const noexcept { return best_; }
  double relative_residual() const noexcept { return relative_residual_; }

 private:
  std::vector<std::complex<double>> best_;
  double relative_residual_;
};

}  // namespace toeplitz
