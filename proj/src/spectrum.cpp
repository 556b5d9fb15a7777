#include "toeplitz/spectrum.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "toeplitz/errors.hpp"
#include "toeplitz/roots.hpp"

namespace toeplitz {

double Partition::granularity() const {
  double g = 0.0;
  for (std::size_t i = 1; i < points.size(); ++i) g = std::max(g, points[i] - points[i - 1]);
  return g;
}

Partition Partition::uniform(double a, double b, int count) {
  if (count < 1) throw ParameterError("partition needs at least one point");
  Partition p;
  if (count == 1) {
    p.points.push_back(0.5 * (a + b));
    return p;
  }
  p.points.reserve(static_cast<std::size_t>(count));
  for (int j = 0; j < count; ++j) {
    p.points.push_back(j + 1 == count ? b : a + (b - a) * j / (count - 1));
  }
  return p;
}

Partition uniform_angles(int m) {
  if (m < 3) throw DegenerateInputError("angle partition needs m >= 3");
  Partition p;
  p.points.reserve(static_cast<std::size_t>(m) + 1);
  for (int j = 0; j <= m; ++j) p.points.push_back(2.0 * std::numbers::pi * j / m);
  return p;
}

RhoInterval rho_bounds(const LaurentSymbol& b, std::vector<std::string>* warnings) {
  const double k = coeff_sup_bound(b);
  const int r = b.r();
  const int s = b.s();
  const auto& c = b.dense();
  const std::size_t deg = static_cast<std::size_t>(r + s);

  // |beta_{-r}| - sum_{n>-r} |beta_n| rho^{n+r} - K rho^r = 0
  std::vector<double> low(deg + 1, 0.0);
  low[0] = std::abs(c[0]);
  for (std::size_t i = 1; i <= deg; ++i) low[i] = -std::abs(c[i]);
  low[static_cast<std::size_t>(r)] -= k;

  // rho^r (|beta_s| rho^s - sum_{n<s} |beta_n| rho^n - K) = 0
  std::vector<double> high(deg + 1, 0.0);
  for (std::size_t i = 0; i < deg; ++i) high[i] = -std::abs(c[i]);
  high[deg] = std::abs(c[deg]);
  high[static_cast<std::size_t>(r)] -= k;

  RhoInterval out;
  const auto low_roots = positive_real_roots(low);
  if (low_roots.empty()) {
    if (warnings) warnings->push_back("rho_bounds: no positive root for the lower bound, using 1");
  } else {
    out.rho_l = std::min(1.0, low_roots.front());
  }
  const auto high_roots = positive_real_roots(high);
  if (high_roots.empty()) {
    if (warnings) warnings->push_back("rho_bounds: no positive root for the upper bound, using 1");
  } else {
    out.rho_h = std::max(1.0, high_roots.back());
  }
  return out;
}

SpectrumPolygon discretize(const LaurentSymbol& b, double rho, const Partition& vs) {
  if (!(rho > 0.0)) throw DomainError("rho must be positive");
  if (vs.points.size() < 4) throw DegenerateInputError("angle partition needs at least 3 intervals");
  SpectrumPolygon sp;
  sp.rho = rho;
  sp.delta_v = vs.granularity();
  sp.ring.reserve(vs.points.size() - 1);
  for (std::size_t j = 0; j + 1 < vs.points.size(); ++j) {
    const Complex z = eval(b, std::polar(rho, vs.points[j]));
    sp.ring.push_back({z.real(), z.imag()});
  }
  return sp;
}

Region region(const SpectrumPolygon& sp, const FixedPointFrame& frame) {
  return Region::from_rings({sp.ring}, frame);
}

double expansion_radius(const SpectrumPolygon& sp, const LaurentSymbol& b, CurvatureBound mode) {
  return second_derivative_bound(b, sp.rho, mode) * sp.delta_v * sp.delta_v;
}

Region expanded(const SpectrumPolygon& sp, const LaurentSymbol& b, const FixedPointFrame& frame,
                CurvatureBound mode) {
  const double delta = expansion_radius(sp, b, mode);
  return offset_outward(region(sp, frame), delta, 2.0 * delta);
}

Box symbol_extent(const LaurentSymbol& b, const RhoInterval& interval) {
  double bound = 0.0;
  for (const double rho : {interval.rho_l, interval.rho_h, 1.0}) {
    double acc = 0.0;
    for (const auto& [n, c] : b.terms()) acc += std::abs(c) * std::pow(rho, n);
    bound = std::max(bound, acc);
  }
  // Absorbs rounding in the evaluation of the sum at its maximizer.
  bound *= 1.0 + 1e-12;
  Box box;
  box.extend(Point{-bound, -bound});
  box.extend(Point{bound, bound});
  return box;
}

}  // namespace toeplitz
