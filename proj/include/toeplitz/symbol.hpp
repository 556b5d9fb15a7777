#pragma once

#include <complex>
#include <map>
#include <vector>

namespace toeplitz {

using Complex = std::complex<double>;

/// Laurent polynomial b(t) = sum_{n=-r}^{s} beta_n t^n with r, s >= 1.
///
/// Stored sparsely (exponent -> coefficient). Exact zero coefficients are
/// dropped; the extremal exponents must carry nonzero coefficients.
class LaurentSymbol {
 public:
  /// Throws DomainError if r < 1, s < 1 or the map is empty after dropping zeros.
  explicit LaurentSymbol(std::map<int, Complex> terms);

  int r() const noexcept { return r_; }
  int s() const noexcept { return s_; }
  int degree() const noexcept { return r_ + s_; }

  const std::map<int, Complex>& terms() const noexcept { return terms_; }
  Complex coefficient(int n) const;

  /// Dense coefficients, index k holds beta_{k-r}.
  const std::vector<Complex>& dense() const noexcept { return dense_; }

  friend bool operator==(const LaurentSymbol& a, const LaurentSymbol& b) {
    return a.terms_ == b.terms_;
  }

 private:
  std::map<int, Complex> terms_;
  std::vector<Complex> dense_;
  int r_ = 0;
  int s_ = 0;
};

/// Compact rho interval outside of which the scaled spectra cover B(0, K).
struct RhoInterval {
  double rho_l = 1.0;
  double rho_h = 1.0;
};

enum class CurvatureBound {
  rigorous,  ///< 2 * sum n^2 |beta_n| rho^n, a strict over-estimate
  sampled,   ///< 1.2 * max over a dense v-grid of |x''| + |y''|
};

/// b(z) with Horner on the z-part and the 1/z-part separately. Throws DomainError at z = 0.
Complex eval(const LaurentSymbol& b, Complex z);

/// b_rho(t) = b(rho t). Throws DomainError for rho <= 0.
LaurentSymbol scaled(const LaurentSymbol& b, double rho);

/// sum |beta_n|, an upper bound for sup_{|t|=1} |b(t)|.
double coeff_sup_bound(const LaurentSymbol& b);

/// Upper bound on sup_v |x''_rho(v)| + |y''_rho(v)| where b(rho e^{iv}) = x + iy.
double second_derivative_bound(const LaurentSymbol& b, double rho,
                               CurvatureBound mode = CurvatureBound::rigorous,
                               int samples = 8192);

/// Coefficients (ascending powers) of Q(lambda, z) = z^r (b(z) - lambda); degree r + s.
std::vector<Complex> q_polynomial(const LaurentSymbol& b, Complex lambda);

/// Coefficients of z^{r+1} b'(z); its nonzero roots are the critical points of b.
std::vector<Complex> derivative_polynomial(const LaurentSymbol& b);

}  // namespace toeplitz
