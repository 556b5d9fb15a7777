#include "toeplitz/hausdorff.hpp"

#include <cmath>
#include <functional>
#include <numbers>

#include "toeplitz/errors.hpp"

namespace toeplitz {

namespace {

DistanceBound search(const Region& sup, int sides, double rel_tol, bool contained,
                     const std::function<Region(double)>& fatten) {
  if (sup.empty()) throw DegenerateInputError("superset is empty");
  if (sides < 3) throw ParameterError("sides must be >= 3");
  if (!(rel_tol > 0.0 && rel_tol < 1.0)) throw ParameterError("rel_tol must lie in (0, 1)");

  const double tol_area = 1e-9 * area(sup);
  DistanceBound out;
  out.sides = sides;
  out.subset_contained = contained;
  auto feasible = [&](double r) {
    ++out.probes;
    return covers(fatten(r), sup, tol_area);
  };

  double lo = 0.0;
  double hi = sup.bounding_box().diagonal();
  if (!(hi > 0.0)) hi = 1.0 / sup.frame().scale();
  for (int k = 0; !feasible(hi); ++k) {
    if (k > 60) throw ParameterError("no covering radius found");
    lo = hi;
    hi *= 2.0;
  }
  while (hi - lo > rel_tol * hi) {
    const double mid = 0.5 * (lo + hi);
    if (feasible(mid)) hi = mid;
    else lo = mid;
  }
  out.r_star = hi;
  out.lower = hi * std::cos(std::numbers::pi / sides);
  return out;
}

}  // namespace

std::vector<Point> to_points(std::span<const Complex> values) {
  std::vector<Point> pts;
  pts.reserve(values.size());
  for (const Complex& v : values) pts.push_back({v.real(), v.imag()});
  return pts;
}

DistanceBound distance_bound(std::span<const Point> sub, const Region& sup, int sides, double rel_tol) {
  if (sub.empty()) throw DegenerateInputError("subset is empty");
  bool contained = true;
  for (const Point& p : sub) {
    if (!sup.empty() && !contains(sup, p)) {
      contained = false;
      break;
    }
  }
  return search(sup, sides, rel_tol, contained,
                [&](double r) { return fatten_points(sub, r, sides, sup.frame()); });
}

DistanceBound distance_bound(const SubsetPoints& sub, const Region& sup, int sides, double rel_tol) {
  const std::vector<Point> pts = to_points(sub.points);
  return distance_bound(pts, sup, sides, rel_tol);
}

DistanceBound segment_distance_bound(std::span<const std::pair<Point, Point>> segments, const Region& sup,
                                     int sides, double rel_tol) {
  if (segments.empty()) throw DegenerateInputError("segment set is empty");
  return search(sup, sides, rel_tol, true,
                [&](double r) { return fatten_segments(segments, r, sides, sup.frame()); });
}

Certificate error_certificate(const LimitSetResult& result, const SubsetPoints& sub, const SweepConfig& cfg,
                              int phi_count, int sides, double rel_tol) {
  Certificate c;
  c.bound = distance_bound(sub, result.superset, sides, rel_tol);
  c.sub_size = sub.points.size();
  c.phi_count = phi_count;
  c.tol = sub.tol;
  c.rel_tol = rel_tol;
  c.cfg = cfg;
  c.interval = result.diagnostics.interval;
  c.superset_area = area(result.superset);
  return c;
}

Certificate error_certificate(const LaurentSymbol& b, const SweepConfig& cfg, int phi_count, double tol,
                              int sides, double rel_tol) {
  if (phi_count < 1) throw ParameterError("phi count must be >= 1");
  const LimitSetResult result = compute_sweep(b, cfg);
  const SubsetPoints sub = subset(b, phi_count, tol, cfg.threads);
  return error_certificate(result, sub, cfg, phi_count, sides, rel_tol);
}

}  // namespace toeplitz
