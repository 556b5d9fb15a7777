#pragma once

#include <string>
#include <vector>

#include "toeplitz/geometry.hpp"
#include "toeplitz/symbol.hpp"

namespace toeplitz {

/// Strictly increasing sample points of a closed interval.
struct Partition {
  std::vector<double> points;

  /// Largest gap between successive points (0 for fewer than two points).
  double granularity() const;

  /// `count` equally spaced points including both endpoints (midpoint when count == 1).
  static Partition uniform(double a, double b, int count);
};

/// Vertices b(rho e^{i v_j}) of the piecewise-linear symbol curve, endpoint duplicate dropped.
struct SpectrumPolygon {
  Ring ring;
  double rho = 1.0;
  double delta_v = 0.0;
};

/// rho interval from the coefficient-majorant equations, widened to contain 1.
/// When an equation has no positive root the corresponding side falls back to 1 and a
/// message is appended to `warnings` (if given).
RhoInterval rho_bounds(const LaurentSymbol& b, std::vector<std::string>* warnings = nullptr);

/// Polygon discretization of b_rho over the partition `vs` of [0, 2π].
/// Throws DegenerateInputError when fewer than three distinct vertices result.
SpectrumPolygon discretize(const LaurentSymbol& b, double rho, const Partition& vs);

/// Uniform partition of [0, 2π] with m intervals.
Partition uniform_angles(int m);

/// The winding region of the polygon, rounded into `frame`.
Region region(const SpectrumPolygon& sp, const FixedPointFrame& frame = FixedPointFrame{});

/// P_rho ⊇ spec T(b_rho): the polygon region offset by C_rho Δv² (cap 2 C_rho Δv²).
Region expanded(const SpectrumPolygon& sp, const LaurentSymbol& b,
                const FixedPointFrame& frame = FixedPointFrame{},
                CurvatureBound mode = CurvatureBound::rigorous);

/// The offset radius C_rho Δv² used by `expanded`.
double expansion_radius(const SpectrumPolygon& sp, const LaurentSymbol& b,
                        CurvatureBound mode = CurvatureBound::rigorous);

/// Box holding every b(rho e^{iv}) for rho in the interval (coefficient majorant bound).
Box symbol_extent(const LaurentSymbol& b, const RhoInterval& interval);

}  // namespace toeplitz
