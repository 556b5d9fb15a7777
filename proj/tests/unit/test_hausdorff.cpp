#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>
#include <vector>

#include "../support/oracles.hpp"
#include "toeplitz/errors.hpp"
#include "toeplitz/hausdorff.hpp"

using namespace toeplitz;

namespace {

Ring circle(double radius, int n) {
  Ring r;
  for (int k = 0; k < n; ++k) {
    const double a = 2 * std::numbers::pi * k / n;
    r.push_back({radius * std::cos(a), radius * std::sin(a)});
  }
  return r;
}

bool feasible(std::span<const Point> sub, const Region& sup, double r, int sides) {
  return covers(fatten_points(sub, r, sides, sup.frame()), sup, 1e-9 * area(sup));
}

}  // namespace

TEST_CASE("single point against a disk approximant") {
  const Region disk = Region::from_rings({circle(1.0, 1024)});
  const std::vector<Point> origin{{0, 0}};
  const DistanceBound d = distance_bound(origin, disk, 20);
  // inscribed 20-gons must reach the circle with their edges: threshold just below 1 / cos(pi / 20)
  CHECK(d.r_star >= 1.0);
  CHECK(d.r_star <= 1.0 / std::cos(std::numbers::pi / 20) * (1 + 1e-3));
  CHECK(d.lower == d.r_star * std::cos(std::numbers::pi / 20));
  CHECK(d.sides == 20);
  CHECK(d.subset_contained);
  CHECK(d.probes > 0);
  const DistanceBound fine = distance_bound(origin, disk, 20, 1e-6);
  CHECK(fine.lower <= 1.0);
  CHECK(fine.r_star >= 1.0);
}

TEST_CASE("vertices of the superset") {
  std::mt19937_64 rng(51);
  for (int trial = 0; trial < 10; ++trial) {
    const Region sup = Region::from_rings({oracle::random_star_polygon(rng, 0.5, 0.5, 0.2, 0.5, 12)});
    // the search runs on the rounded vertices the region stores
    const std::vector<Point> verts = sup.user_rings().front();
    const DistanceBound d = distance_bound(verts, sup, 20);

    // rasterization oracle for the directed distance sup -> vertices
    const int grid = 200;
    double worst = 0.0;
    const auto rings = sup.user_rings();
    for (int i = 0; i < grid; ++i) {
      for (int j = 0; j < grid; ++j) {
        const Point p{(i + 0.5) / grid, (j + 0.5) / grid};
        if (oracle::angle_winding(rings, p) == 0) continue;
        double near = INFINITY;
        for (const Point& v : verts) near = std::min(near, std::hypot(p.x - v.x, p.y - v.y));
        worst = std::max(worst, near);
      }
    }
    CHECK(worst <= d.r_star);
    CHECK(d.lower <= (worst + std::sqrt(2.0) / grid) * (1 + 1e-3));
  }
}

TEST_CASE("sandwich and monotone feasibility") {
  std::mt19937_64 rng(52);
  std::uniform_real_distribution<double> u(0.3, 0.7);
  for (int trial = 0; trial < 5; ++trial) {
    const Region sup = Region::from_rings({oracle::random_star_polygon(rng, 0.5, 0.5, 0.2, 0.45, 16)});
    std::vector<Point> sub;
    const auto rings = sup.user_rings();
    while (sub.size() < 15) {
      const Point p{u(rng), u(rng)};
      if (oracle::angle_winding(rings, p) != 0) sub.push_back(p);
    }
    const DistanceBound d = distance_bound(sub, sup, 20);
    CHECK(d.lower == d.r_star * std::cos(std::numbers::pi / 20));
    CHECK(d.lower <= d.r_star);
    CHECK(d.lower / d.r_star == doctest::Approx(0.98769).epsilon(1e-5));
    CHECK(feasible(sub, sup, d.r_star, 20));
    CHECK(feasible(sub, sup, 1.01 * d.r_star, 20));
    CHECK(!feasible(sub, sup, 0.5 * d.r_star, 20));
    CHECK(!feasible(sub, sup, d.r_star * (1 - 2e-3), 20));
  }
}

TEST_CASE("subset points outside the superset are reported") {
  const Region sup = Region::from_rings({circle(1.0, 64)});
  const std::vector<Point> sub{{0, 0}, {3, 0}};
  const DistanceBound d = distance_bound(sub, sup, 20);
  CHECK(!d.subset_contained);
  CHECK(d.r_star > 0.0);
}

TEST_CASE("segment distance bound for the star") {
  const Ring ring = circle(2.0, 256);
  const Region sup = Region::from_rings({ring});
  const DistanceBound d = segment_distance_bound(oracle::star_segments(), sup, 20);
  // the farthest point of a convex region from the star lies on its boundary
  double worst = 0.0;
  for (std::size_t k = 0; k < ring.size(); ++k) {
    const Point& a = ring[k];
    const Point& b = ring[(k + 1) % ring.size()];
    for (int j = 0; j < 20; ++j) {
      worst = std::max(worst, oracle::star_distance({a.x + (b.x - a.x) * j / 20, a.y + (b.y - a.y) * j / 20}));
    }
  }
  CHECK(d.r_star >= worst);
  CHECK(d.lower <= worst * (1 + 1e-3) + 1e-6);
}

TEST_CASE("input errors") {
  const Region sup = Region::from_rings({circle(1.0, 16)});
  CHECK_THROWS_AS(distance_bound(std::vector<Point>{}, sup), DegenerateInputError);
  CHECK_THROWS_AS(distance_bound(std::vector<Point>{{0, 0}}, Region()), DegenerateInputError);
  const LaurentSymbol star({{-4, 1.0}, {1, 1.0}});
  SweepConfig cfg;
  cfg.n = 10;
  cfg.m = 100;
  CHECK_THROWS_AS(error_certificate(star, cfg, 0), ParameterError);
}

TEST_CASE("certificate on the star") {
  const LaurentSymbol star({{-4, 1.0}, {1, 1.0}});
  SweepConfig cfg;
  cfg.n = 100;
  cfg.m = 1000;
  const Certificate c = error_certificate(star, cfg, 200);
  CHECK(c.bound.subset_contained);
  CHECK(c.bound.r_star < 0.2);
  CHECK(c.bound.lower == c.bound.r_star * std::cos(std::numbers::pi / 20));
  CHECK(c.sub_size > 0);
  CHECK(c.phi_count == 200);

  // the reused-pieces overload agrees, and the true limit set is within r_star of the superset
  const LimitSetResult res = compute_sweep(star, cfg);
  const SubsetPoints sub = subset(star, 200);
  const Certificate again = error_certificate(res, sub, cfg, 200);
  CHECK(again.bound.r_star == c.bound.r_star);
  for (const auto& ring : res.superset.user_rings()) {
    for (const Point& p : ring) CHECK(oracle::star_distance(p) <= c.bound.r_star);
  }
  for (const auto& [a, b] : oracle::star_segments()) {
    for (int k = 0; k <= 50; ++k) {
      const Point p{a.x + (b.x - a.x) * k / 50, a.y + (b.y - a.y) * k / 50};
      CHECK(contains(res.superset, p));
    }
  }
}
