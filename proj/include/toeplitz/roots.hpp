#pragma once

#include <complex>
#include <span>
#include <vector>

namespace toeplitz {

using Complex = std::complex<double>;

/// Roots of a polynomial, multiplicities repeated.
struct RootSet {
  std::vector<Complex> roots;
  /// max_j |p(z_j)| / |leading coefficient|
  double residual = 0.0;
  /// max_j |p(z_j)| / sum_k |a_k| |z_j|^k (backward error)
  double relative_residual = 0.0;

  /// Ascending modulus, ties broken by argument.
  std::vector<Complex> sorted_by_modulus() const;
};

struct RootOptions {
  int max_iterations = 1000;
  /// Coefficients with modulus <= strip_tolerance * max|a_k| count as zero at either end.
  double strip_tolerance = 1e-14;
  /// Required backward error of every returned root.
  double target_relative_residual = 1e-10;
};

/// All complex roots by Aberth-Ehrlich simultaneous iteration. `coeffs[k]` multiplies z^k.
///
/// Leading near-zero coefficients lower the degree; trailing (low-order) near-zero
/// coefficients become exact zero roots. Throws DegenerateInputError when the stripped
/// polynomial is constant and ConvergenceError when the residual target is missed.
RootSet all_roots(std::span<const Complex> coeffs, const RootOptions& options = {});

/// Positive real roots of a real polynomial, ascending, each bisection-polished to 1e-12.
std::vector<double> positive_real_roots(std::span<const double> coeffs);

/// |z_{r+1}| - |z_r| with roots sorted by modulus (1-indexed). Throws on fewer than r+1 roots.
double middle_moduli_gap(const RootSet& rs, int r);

/// p(z) by Horner, ascending coefficients.
Complex horner(std::span<const Complex> coeffs, Complex z);

}  // namespace toeplitz
