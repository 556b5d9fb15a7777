#pragma once

// Independent reference computations used by the tests. None of these call into the
// library's numerical kernels.

#include <algorithm>
#include <cmath>
#include <complex>
#include <functional>
#include <numbers>
#include <random>
#include <vector>

#include "toeplitz/geometry.hpp"

namespace oracle {

using toeplitz::Point;
using toeplitz::Ring;

/// Root of f on [a, b] with a sign change, to absolute width `tol`.
inline double bisect(const std::function<double(double)>& f, double a, double b, double tol = 1e-14) {
  double fa = f(a);
  for (int k = 0; k < 300 && b - a > tol; ++k) {
    const double mid = 0.5 * (a + b);
    const double fm = f(mid);
    if ((fm < 0.0) == (fa < 0.0)) {
      a = mid;
      fa = fm;
    } else {
      b = mid;
    }
  }
  return 0.5 * (a + b);
}

/// Winding number by summing signed angles subtended by the edges.
inline int angle_winding(const Ring& ring, Point p) {
  double total = 0.0;
  for (std::size_t i = 0; i < ring.size(); ++i) {
    const Point& a = ring[i];
    const Point& b = ring[(i + 1) % ring.size()];
    const double ax = a.x - p.x, ay = a.y - p.y, bx = b.x - p.x, by = b.y - p.y;
    total += std::atan2(ax * by - ay * bx, ax * bx + ay * by);
  }
  return static_cast<int>(std::lround(total / (2.0 * std::numbers::pi)));
}

inline int angle_winding(const std::vector<Ring>& rings, Point p) {
  int w = 0;
  for (const auto& r : rings) w += angle_winding(r, p);
  return w;
}

inline double segment_distance(Point p, Point a, Point b) {
  const double dx = b.x - a.x, dy = b.y - a.y;
  const double len2 = dx * dx + dy * dy;
  double t = len2 > 0.0 ? ((p.x - a.x) * dx + (p.y - a.y) * dy) / len2 : 0.0;
  t = std::clamp(t, 0.0, 1.0);
  return std::hypot(p.x - a.x - t * dx, p.y - a.y - t * dy);
}

/// Distance from p to the closed polyline set.
inline double distance_to_rings(const std::vector<Ring>& rings, Point p) {
  double d = INFINITY;
  for (const auto& r : rings) {
    for (std::size_t i = 0; i < r.size(); ++i) d = std::min(d, segment_distance(p, r[i], r[(i + 1) % r.size()]));
  }
  return d;
}

/// Arm length of the limit set of t^-4 + t.
inline double star_arm() { return 5.0 * std::pow(4.0, -0.8); }

/// The five arms {r e^{2 pi i k / 5} : 0 <= r <= arm} as segments.
inline std::vector<std::pair<Point, Point>> star_segments() {
  std::vector<std::pair<Point, Point>> out;
  for (int k = 0; k < 5; ++k) {
    const double a = 2.0 * std::numbers::pi * k / 5.0;
    out.push_back({Point{0.0, 0.0}, Point{star_arm() * std::cos(a), star_arm() * std::sin(a)}});
  }
  return out;
}

inline double star_distance(Point p) {
  double d = INFINITY;
  for (const auto& [a, b] : star_segments()) d = std::min(d, segment_distance(p, a, b));
  return d;
}

/// Random simple-or-not polygon with 3..max_vertices vertices in [0, 1]^2.
inline Ring random_polygon(std::mt19937_64& rng, int max_vertices = 12) {
  std::uniform_int_distribution<int> count(3, max_vertices);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  Ring r(static_cast<std::size_t>(count(rng)));
  for (auto& p : r) p = {unit(rng), unit(rng)};
  return r;
}

/// Random star-shaped (hence simple) polygon around (cx, cy).
inline Ring random_star_polygon(std::mt19937_64& rng, double cx, double cy, double rmin, double rmax, int n) {
  std::uniform_real_distribution<double> rad(rmin, rmax);
  std::uniform_real_distribution<double> jitter(-0.3, 0.3);
  Ring r;
  for (int k = 0; k < n; ++k) {
    const double a = 2.0 * std::numbers::pi * (k + 0.5 + jitter(rng)) / n;
    const double d = rad(rng);
    r.push_back({cx + d * std::cos(a), cy + d * std::sin(a)});
  }
  return r;
}

/// Roots of sum c[k] z^k by Weierstrass (Durand-Kerner) iteration; c.back() must be nonzero.
inline std::vector<std::complex<double>> weierstrass_roots(const std::vector<std::complex<double>>& c) {
  using C = std::complex<double>;
  const std::size_t n = c.size() - 1;
  std::vector<C> monic(c.size());
  for (std::size_t k = 0; k <= n; ++k) monic[k] = c[k] / c[n];
  double bound = 0.0;
  for (std::size_t k = 0; k < n; ++k) bound = std::max(bound, std::abs(monic[k]));
  std::vector<C> z(n);
  for (std::size_t k = 0; k < n; ++k) z[k] = std::polar(1.0 + bound, 0.4 + 2.0 * std::numbers::pi * k / n);
  for (int it = 0; it < 5000; ++it) {
    double change = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      C num = 1.0;
      for (std::size_t k = n; k-- > 0;) num = num * z[i] + monic[k];
      C den = 1.0;
      for (std::size_t j = 0; j < n; ++j) {
        if (j != i) den *= z[i] - z[j];
      }
      const C step = num / den;
      z[i] -= step;
      change = std::max(change, std::abs(step) / std::max(1.0, std::abs(z[i])));
    }
    if (change < 1e-15) break;
  }
  return z;
}

/// |z_{r+1}| - |z_r| for the roots of z^r (b(z) - lambda), b given by exponent/coefficient pairs.
inline double root_gap(const std::vector<std::pair<int, std::complex<double>>>& terms, int r,
                       std::complex<double> lambda) {
  int top = 0;
  for (const auto& [n, c] : terms) top = std::max(top, n + r);
  std::vector<std::complex<double>> q(static_cast<std::size_t>(top) + 1);
  for (const auto& [n, c] : terms) q[static_cast<std::size_t>(n + r)] += c;
  q[static_cast<std::size_t>(r)] -= lambda;
  const auto roots = weierstrass_roots(q);
  std::vector<double> mod;
  for (const auto& z : roots) mod.push_back(std::abs(z));
  std::sort(mod.begin(), mod.end());
  return mod[static_cast<std::size_t>(r)] - mod[static_cast<std::size_t>(r) - 1];
}

}  // namespace oracle
