#include "toeplitz/roots.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "toeplitz/errors.hpp"

namespace toeplitz {

namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();

struct NewtonStep {
  Complex ratio;          // p(z) / p'(z)
  double backward_error;  // |p(z)| / sum |a_k| |z|^k
  bool exact_root;
};

// Evaluates p and p' at z, switching to the reversed polynomial outside the unit disk.
NewtonStep newton_step(std::span<const Complex> a, Complex z) {
  const std::size_t n = a.size() - 1;
  const double az = std::abs(z);
  if (az <= 1.0) {
    Complex p = a[n];
    Complex dp{};
    double mag = std::abs(a[n]);
    for (std::size_t k = n; k-- > 0;) {
      dp = dp * z + p;
      p = p * z + a[k];
      mag = mag * az + std::abs(a[k]);
    }
    if (p == Complex{}) return {Complex{}, 0.0, true};
    const double be = std::abs(p) / mag;
    if (dp == Complex{}) return {Complex{}, be, false};
    return {p / dp, be, false};
  }
  const Complex w = 1.0 / z;
  const double aw = 1.0 / az;
  Complex q = a[0];
  Complex dq{};
  double mag = std::abs(a[0]);
  for (std::size_t k = 1; k <= n; ++k) {
    dq = dq * w + q;
    q = q * w + a[k];
    mag = mag * aw + std::abs(a[k]);
  }
  if (q == Complex{}) return {Complex{}, 0.0, true};
  const double be = std::abs(q) / mag;
  const Complex denom = static_cast<double>(n) * q - w * dq;
  if (denom == Complex{}) return {Complex{}, be, false};
  return {z * q / denom, be, false};
}

// Starting points on circles from the upper convex hull of (k, log|a_k|).
std::vector<Complex> initial_guesses(std::span<const Complex> a) {
  const int n = static_cast<int>(a.size()) - 1;
  std::vector<int> hull;
  auto lg = [&](int k) { return std::log(std::abs(a[static_cast<std::size_t>(k)])); };
  for (int k = 0; k <= n; ++k) {
    if (a[static_cast<std::size_t>(k)] == Complex{}) continue;
    while (hull.size() >= 2) {
      const int i = hull[hull.size() - 2];
      const int j = hull.back();
      // drop j if it lies on or below segment (i, k)
      const double cross = (j - i) * (lg(k) - lg(i)) - (k - i) * (lg(j) - lg(i));
      if (cross >= 0.0) hull.pop_back();
      else break;
    }
    hull.push_back(k);
  }

  std::vector<Complex> z;
  z.reserve(static_cast<std::size_t>(n));
  constexpr double kSigma = 0.7;
  const double two_pi = 2.0 * std::numbers::pi;
  for (std::size_t h = 0; h + 1 < hull.size(); ++h) {
    const int i = hull[h];
    const int j = hull[h + 1];
    const int count = j - i;
    const double radius = std::exp((lg(i) - lg(j)) / count);
    for (int t = 0; t < count; ++t) {
      const double angle = two_pi * t / count + two_pi * i / n + kSigma;
      z.push_back(std::polar(radius, angle));
    }
  }
  return z;
}

}  // namespace

Complex horner(std::span<const Complex> coeffs, Complex z) {
  Complex p{};
  for (std::size_t k = coeffs.size(); k-- > 0;) p = p * z + coeffs[k];
  return p;
}

std::vector<Complex> RootSet::sorted_by_modulus() const {
  std::vector<Complex> out = roots;
  std::sort(out.begin(), out.end(), [](Complex x, Complex y) {
    const double ax = std::abs(x);
    const double ay = std::abs(y);
    if (ax != ay) return ax < ay;
    return std::arg(x) < std::arg(y);
  });
  return out;
}

RootSet all_roots(std::span<const Complex> coeffs, const RootOptions& options) {
  double max_mag = 0.0;
  for (const auto& c : coeffs) {
    if (!std::isfinite(c.real()) || !std::isfinite(c.imag())) {
      throw DomainError("polynomial coefficient is not finite");
    }
    max_mag = std::max(max_mag, std::abs(c));
  }
  const double cutoff = options.strip_tolerance * max_mag;
  auto negligible = [&](const Complex& c) { return std::abs(c) <= cutoff; };

  std::size_t hi = coeffs.size();
  while (hi > 0 && negligible(coeffs[hi - 1])) --hi;
  std::size_t lo = 0;
  while (lo < hi && negligible(coeffs[lo])) ++lo;
  if (hi == 0 || hi - 1 == 0) {
    throw DegenerateInputError("polynomial has degree 0 after stripping negligible coefficients");
  }

  RootSet out;
  out.roots.assign(lo, Complex{});
  const std::vector<Complex> a(coeffs.begin() + static_cast<std::ptrdiff_t>(lo),
                               coeffs.begin() + static_cast<std::ptrdiff_t>(hi));
  const std::size_t n = a.size() - 1;

  std::vector<Complex> z;
  if (n == 1) {
    z.push_back(-a[0] / a[1]);
  } else if (n > 1) {
    z = initial_guesses(a);
    std::vector<char> done(n, 0);
    const double stop = 4.0 * kEps * static_cast<double>(n + 1);
    for (int it = 0; it < options.max_iterations; ++it) {
      bool all_done = true;
      for (std::size_t i = 0; i < n; ++i) {
        if (done[i]) continue;
        const NewtonStep step = newton_step(a, z[i]);
        if (step.exact_root || step.backward_error <= stop) {
          done[i] = 1;
          continue;
        }
        all_done = false;
        Complex sum{};
        for (std::size_t j = 0; j < n; ++j) {
          if (j != i) sum += 1.0 / (z[i] - z[j]);
        }
        Complex corr = step.ratio;
        const Complex denom = 1.0 - step.ratio * sum;
        if (denom != Complex{}) corr = step.ratio / denom;
        if (!std::isfinite(corr.real()) || !std::isfinite(corr.imag())) continue;
        z[i] -= corr;
        if (std::abs(corr) <= 2.0 * kEps * std::abs(z[i])) done[i] = 1;
      }
      if (all_done) break;
    }
  }

  double rel = 0.0;
  double res = 0.0;
  const double lead = std::abs(a[n]);
  for (const auto& zi : z) {
    rel = std::max(rel, newton_step(a, zi).backward_error);
    res = std::max(res, std::abs(horner(a, zi)) * std::pow(std::abs(zi), static_cast<double>(lo)) / lead);
  }
  out.roots.insert(out.roots.end(), z.begin(), z.end());
  out.residual = res;
  out.relative_residual = rel;

  if (!(rel <= options.target_relative_residual)) {
    throw ConvergenceError("root iteration did not converge (relative residual " +
                               std::to_string(rel) + ")",
                           out.roots, rel);
  }
  return out;
}

std::vector<double> positive_real_roots(std::span<const double> coeffs) {
  std::vector<Complex> c(coeffs.begin(), coeffs.end());
  const RootSet rs = all_roots(c);

  auto p = [&](double x) {
    double v = 0.0;
    for (std::size_t k = coeffs.size(); k-- > 0;) v = v * x + coeffs[k];
    return v;
  };

  std::vector<double> out;
  for (const auto& z : rs.roots) {
    if (!(z.real() > 0.0) || std::abs(z.imag()) > 1e-9 * (1.0 + std::abs(z.real()))) continue;
    double x = z.real();
    const double px = p(x);
    if (px != 0.0) {
      double h = std::max(1e-12, 1e-9 * x);
      double lo = x;
      double hi = x;
      bool bracketed = false;
      for (int k = 0; k < 40 && !bracketed; ++k, h *= 4.0) {
        lo = std::max(x - h, 0.0);
        hi = x + h;
        bracketed = (p(lo) <= 0.0) != (p(hi) <= 0.0);
      }
      if (bracketed) {
        double plo = p(lo);
        for (int k = 0; k < 200 && hi - lo > 1e-12; ++k) {
          const double mid = 0.5 * (lo + hi);
          const double pm = p(mid);
          if (pm == 0.0) {
            lo = hi = mid;
            break;
          }
          if ((pm < 0.0) == (plo < 0.0)) {
            lo = mid;
            plo = pm;
          } else {
            hi = mid;
          }
        }
        x = 0.5 * (lo + hi);
      }
    }
    out.push_back(x);
  }
  std::sort(out.begin(), out.end());
  return out;
}

double middle_moduli_gap(const RootSet& rs, int r) {
  if (r < 1 || rs.roots.size() < static_cast<std::size_t>(r) + 1) {
    throw std::invalid_argument("middle_moduli_gap needs at least r + 1 roots (r = " +
                                std::to_string(r) + ", have " +
                                std::to_string(rs.roots.size()) + ")");
  }
  const auto sorted = rs.sorted_by_modulus();
  return std::abs(sorted[static_cast<std::size_t>(r)]) -
         std::abs(sorted[static_cast<std::size_t>(r - 1)]);
}

}  // namespace toeplitz
