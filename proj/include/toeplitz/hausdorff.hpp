#pragma once

#include <span>
#include <utility>

#include "toeplitz/algebraic.hpp"
#include "toeplitz/geometry.hpp"
#include "toeplitz/limitset.hpp"

namespace toeplitz {

/// r_star * cos(pi / sides) = lower <= d_H(sub, sup) <= r_star (when sub ⊆ sup).
struct DistanceBound {
  double r_star = 0.0;
  double lower = 0.0;
  int sides = 20;
  /// False if some subset point lies outside sup; the bound then covers only sup -> sub.
  bool subset_contained = true;
  int probes = 0;
};

/// Binary search for the smallest r whose polygonal r-fattening of `sub` covers `sup`
/// up to 1e-9 * area(sup). Stops once hi - lo <= rel_tol * hi.
DistanceBound distance_bound(std::span<const Point> sub, const Region& sup, int sides = 20,
                             double rel_tol = 1e-3);
DistanceBound distance_bound(const SubsetPoints& sub, const Region& sup, int sides = 20,
                             double rel_tol = 1e-3);

/// Same search with segments in place of points (bounds d_H between a polyline set and sup).
DistanceBound segment_distance_bound(std::span<const std::pair<Point, Point>> segments, const Region& sup,
                                     int sides = 20, double rel_tol = 1e-3);

struct Certificate {
  DistanceBound bound;
  std::size_t sub_size = 0;
  int phi_count = 0;
  double tol = 1e-7;
  double rel_tol = 1e-3;
  SweepConfig cfg;
  RhoInterval interval;
  double superset_area = 0.0;
};

/// Runs the sweep sampler and the algebraic subset, then bounds their Hausdorff distance;
/// both the superset and the subset are then within r_star of the limit set.
Certificate error_certificate(const LaurentSymbol& b, const SweepConfig& cfg, int phi_count,
                              double tol = 1e-7, int sides = 20, double rel_tol = 1e-3);

/// Same, reusing already computed pieces.
Certificate error_certificate(const LimitSetResult& result, const SubsetPoints& sub, const SweepConfig& cfg,
                              int phi_count, int sides = 20, double rel_tol = 1e-3);

std::vector<Point> to_points(std::span<const Complex> values);

}  // namespace toeplitz
