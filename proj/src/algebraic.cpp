#include "toeplitz/algebraic.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

#include "toeplitz/errors.hpp"
#include "toeplitz/limitset.hpp"
#include "toeplitz/roots.hpp"

namespace toeplitz {

bool membership(const LaurentSymbol& b, Complex lambda, double tol) {
  if (!(tol > 0.0)) throw ParameterError("membership tolerance must be positive");
  try {
    const RootSet rs = all_roots(q_polynomial(b, lambda));
    return middle_moduli_gap(rs, b.r()) <= tol;
  } catch (const ConvergenceError& e) {
    std::ostringstream msg;
    msg.precision(17);
    msg << e.what() << " at lambda = (" << lambda.real() << ", " << lambda.imag() << ")";
    throw ConvergenceError(msg.str(), e.best_iterate(), e.relative_residual());
  }
}

std::vector<Complex> deduplicate(std::vector<Complex> pts, double radius) {
  std::sort(pts.begin(), pts.end(), [](Complex a, Complex c) {
    return a.real() != c.real() ? a.real() < c.real() : a.imag() < c.imag();
  });
  std::vector<Complex> kept;
  kept.reserve(pts.size());
  for (const Complex& p : pts) {
    bool dup = false;
    for (auto it = kept.rbegin(); it != kept.rend() && it->real() >= p.real() - radius; ++it) {
      if (std::abs(*it - p) <= radius) {
        dup = true;
        break;
      }
    }
    if (!dup) kept.push_back(p);
  }
  return kept;
}

namespace {

void append_values(const LaurentSymbol& b, const std::vector<Complex>& roots, std::vector<Complex>& out) {
  for (const Complex& z : roots) {
    if (z == Complex{}) continue;
    const Complex v = eval(b, z);
    if (std::isfinite(v.real()) && std::isfinite(v.imag())) out.push_back(v);
  }
}

}  // namespace

std::vector<Complex> candidate_points(const LaurentSymbol& b, std::span<const double> phis, int threads,
                                      CandidateStats* stats) {
  if (phis.empty()) throw ParameterError("candidate_points needs at least one angle");
  const int r = b.r();
  std::vector<std::vector<Complex>> per_angle(phis.size());
  std::vector<char> status(phis.size(), 0);  // 0 ok, 1 degenerate, 2 failed
  parallel_for(phis.size(), threads, [&](std::size_t k) {
    std::vector<Complex> coeffs(static_cast<std::size_t>(b.degree()) + 1);
    for (const auto& [n, beta] : b.terms()) {
      // factors at whole turns are set to exact zero so degree drops are detected
      const double turn = std::remainder(n * phis[k], 2.0 * std::numbers::pi);
      const bool whole = std::abs(turn) <= 1e-12 * std::max(1.0, std::abs(n * phis[k]));
      coeffs[static_cast<std::size_t>(n + r)] = whole ? Complex{} : beta * (1.0 - std::polar(1.0, turn));
    }
    try {
      append_values(b, all_roots(coeffs).roots, per_angle[k]);
    } catch (const DegenerateInputError&) {
      status[k] = 1;
    } catch (const ConvergenceError&) {
      status[k] = 2;
    }
  });

  std::vector<Complex> all;
  append_values(b, all_roots(derivative_polynomial(b)).roots, all);
  CandidateStats local;
  for (std::size_t k = 0; k < phis.size(); ++k) {
    all.insert(all.end(), per_angle[k].begin(), per_angle[k].end());
    if (status[k] == 1) ++local.degenerate;
    if (status[k] == 2) ++local.failed;
  }
  if (stats) *stats = local;
  return deduplicate(std::move(all));
}

SubsetPoints subset(const LaurentSymbol& b, int N, double tol, int threads) {
  if (N < 1) throw ParameterError("subset needs N >= 1");
  if (!(tol > 0.0)) throw ParameterError("membership tolerance must be positive");
  std::vector<double> phis(static_cast<std::size_t>(N));
  for (int j = 1; j <= N; ++j) phis[static_cast<std::size_t>(j - 1)] = std::numbers::pi * j / N;

  const std::vector<Complex> cand = candidate_points(b, phis, threads);
  std::vector<char> keep(cand.size(), 0);
  parallel_for(cand.size(), threads, [&](std::size_t k) {
    try {
      keep[k] = membership(b, cand[k], tol) ? 1 : 2;
    } catch (const ConvergenceError&) {
      keep[k] = 0;
    }
  });

  SubsetPoints out;
  out.tol = tol;
  out.candidates = cand.size();
  for (std::size_t k = 0; k < cand.size(); ++k) {
    if (keep[k] == 1) out.points.push_back(cand[k]);
    if (keep[k] == 0) ++out.failed;
  }
  return out;
}

}  // namespace toeplitz
