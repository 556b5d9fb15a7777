#include "toeplitz/symbol.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "toeplitz/errors.hpp"

namespace toeplitz {

LaurentSymbol::LaurentSymbol(std::map<int, Complex> terms) {
  for (const auto& [n, c] : terms) {
    if (!std::isfinite(c.real()) || !std::isfinite(c.imag())) {
      throw DomainError("symbol coefficient for exponent " + std::to_string(n) + " is not finite");
    }
    if (c != Complex{}) terms_.emplace(n, c);
  }
  if (terms_.empty()) throw DomainError("symbol has no nonzero coefficients");
  r_ = -terms_.begin()->first;
  s_ = terms_.rbegin()->first;
  if (r_ < 1 || s_ < 1) {
    throw DomainError("symbol must have r >= 1 and s >= 1 (got r = " + std::to_string(r_) +
                      ", s = " + std::to_string(s_) + ")");
  }
  dense_.assign(static_cast<std::size_t>(r_ + s_ + 1), Complex{});
  for (const auto& [n, c] : terms_) dense_[static_cast<std::size_t>(n + r_)] = c;
}

Complex LaurentSymbol::coefficient(int n) const {
  auto it = terms_.find(n);
  return it == terms_.end() ? Complex{} : it->second;
}

Complex eval(const LaurentSymbol& b, Complex z) {
  if (z == Complex{}) throw DomainError("symbol evaluated at z = 0");
  const auto& c = b.dense();
  const int r = b.r();
  const int s = b.s();

  Complex pos{};
  for (int n = s; n >= 0; --n) pos = pos * z + c[static_cast<std::size_t>(n + r)];

  const Complex w = 1.0 / z;
  Complex neg{};
  for (int n = r; n >= 1; --n) neg = (neg + c[static_cast<std::size_t>(r - n)]) * w;

  return pos + neg;
}

LaurentSymbol scaled(const LaurentSymbol& b, double rho) {
  if (!(rho > 0.0) || !std::isfinite(rho)) throw DomainError("scaling factor rho must be positive");
  std::map<int, Complex> out;
  for (const auto& [n, c] : b.terms()) out.emplace(n, c * std::pow(rho, n));
  return LaurentSymbol(std::move(out));
}

double coeff_sup_bound(const LaurentSymbol& b) {
  double k = 0.0;
  for (const auto& [n, c] : b.terms()) k += std::abs(c);
  return k;
}

double second_derivative_bound(const LaurentSymbol& b, double rho, CurvatureBound mode,
                               int samples) {
  if (!(rho > 0.0) || !std::isfinite(rho)) throw DomainError("scaling factor rho must be positive");

  if (mode == CurvatureBound::rigorous) {
    // |x''| + |y''| <= 2 |d^2/dv^2 b(rho e^{iv})| <= 2 sum n^2 |beta_n| rho^n
    double acc = 0.0;
    for (const auto& [n, c] : b.terms()) {
      acc += static_cast<double>(n) * n * std::abs(c) * std::pow(rho, n);
    }
    return 2.0 * acc;
  }

  if (samples < 1) throw ParameterError("second_derivative_bound needs at least one sample");
  // d^2/dv^2 b(rho e^{iv}) = -sum n^2 beta_n rho^n e^{inv}
  std::vector<std::pair<int, Complex>> weighted;
  for (const auto& [n, c] : b.terms()) {
    if (n != 0) weighted.emplace_back(n, -static_cast<double>(n) * n * c * std::pow(rho, n));
  }
  double best = 0.0;
  for (int k = 0; k < samples; ++k) {
    const double v = 2.0 * std::numbers::pi * k / samples;
    Complex d2{};
    for (const auto& [n, w] : weighted) d2 += w * std::polar(1.0, n * v);
    best = std::max(best, std::abs(d2.real()) + std::abs(d2.imag()));
  }
  return 1.2 * best;
}

std::vector<Complex> q_polynomial(const LaurentSymbol& b, Complex lambda) {
  std::vector<Complex> q = b.dense();
  q[static_cast<std::size_t>(b.r())] -= lambda;
  return q;
}

std::vector<Complex> derivative_polynomial(const LaurentSymbol& b) {
  std::vector<Complex> d(b.dense().size(), Complex{});
  for (const auto& [n, c] : b.terms()) d[static_cast<std::size_t>(n + b.r())] = static_cast<double>(n) * c;
  return d;
}

}  // namespace toeplitz
