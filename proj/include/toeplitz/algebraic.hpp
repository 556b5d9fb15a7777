#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "toeplitz/symbol.hpp"

namespace toeplitz {

/// Points certified to lie in the limit set.
struct SubsetPoints {
  std::vector<Complex> points;
  double tol = 1e-7;
  /// Candidates examined and candidates whose root solve failed (skipped, not certified).
  std::size_t candidates = 0;
  std::size_t failed = 0;
};

/// True iff the r-th and (r+1)-th smallest root moduli of z^r (b(z) - lambda) differ by
/// at most `tol`. A ConvergenceError from the root solve is rethrown with lambda in the message.
bool membership(const LaurentSymbol& b, Complex lambda, double tol = 1e-7);

struct CandidateStats {
  std::size_t degenerate = 0;  ///< angles whose equation vanished identically
  std::size_t failed = 0;      ///< angles whose root solve did not converge
};

/// Values b(z) at nonzero solutions of b(z) = b(z e^{i phi}) for each phi, plus the critical
/// values of b; deduplicated within 1e-9 and sorted lexicographically.
std::vector<Complex> candidate_points(const LaurentSymbol& b, std::span<const double> phis,
                                      int threads = 1, CandidateStats* stats = nullptr);

/// Certified subset from N angles phi_j = pi j / N, j = 1..N.
SubsetPoints subset(const LaurentSymbol& b, int N, double tol = 1e-7, int threads = 1);

/// Removes points within `radius` of an earlier kept point (lexicographic order), returns sorted.
std::vector<Complex> deduplicate(std::vector<Complex> pts, double radius = 1e-9);

}  // namespace toeplitz
