#include <doctest.h>

#include <cmath>
#include <numbers>

#include "../support/oracles.hpp"
#include "toeplitz/algebraic.hpp"
#include "toeplitz/errors.hpp"
#include "toeplitz/limitset.hpp"

using namespace toeplitz;

namespace {

LaurentSymbol star() { return LaurentSymbol({{-4, 1.0}, {1, 1.0}}); }
LaurentSymbol tridiagonal() { return LaurentSymbol({{-1, 1.0}, {1, 1.0}}); }

bool same_region(const Region& a, const Region& b) { return a.frame() == b.frame() && a.rings() == b.rings(); }

}  // namespace

TEST_CASE("sample_rhos") {
  CHECK(sample_rhos({1.0, 2.0}, 3, RhoSampling::uniform).points == std::vector<double>{1.0, 1.5, 2.0});
  const auto inv = sample_rhos({0.5, 1.0}, 3, RhoSampling::inverse).points;
  REQUIRE(inv.size() == 3);
  CHECK(inv[0] == doctest::Approx(0.5));
  CHECK(inv[1] == doctest::Approx(2.0 / 3));
  CHECK(inv[2] == doctest::Approx(1.0));
  const auto split = sample_rhos({0.5, 2.0}, 4, RhoSampling::inverse).points;
  REQUIRE(split.size() == 4);
  CHECK(split[0] == doctest::Approx(0.5));
  CHECK(split[1] == doctest::Approx(2.0 / 3));
  CHECK(split[2] == doctest::Approx(1.0));
  CHECK(split[3] == doctest::Approx(2.0));
  CHECK(sample_rhos({1.0, 3.0}, 1, RhoSampling::inverse).points == std::vector<double>{2.0});
  CHECK_THROWS_AS(sample_rhos({1.0, 2.0}, 0, RhoSampling::uniform), ParameterError);

  for (int count : {2, 3, 7, 50, 101}) {
    for (auto mode : {RhoSampling::uniform, RhoSampling::inverse}) {
      const auto p = sample_rhos({0.2, 3.0}, count, mode).points;
      CHECK(p.size() == static_cast<std::size_t>(count));
      CHECK(std::is_sorted(p.begin(), p.end()));
      CHECK(std::adjacent_find(p.begin(), p.end()) == p.end());
      CHECK(p.front() == doctest::Approx(0.2));
      CHECK(p.back() == doctest::Approx(3.0));
    }
  }
}

TEST_CASE("moving_average") {
  const std::vector<double> v{0, 0, 5, 0, 0};
  const auto s = moving_average(v, 3);
  CHECK(s == std::vector<double>{0, 5.0 / 3, 5.0 / 3, 5.0 / 3, 0});
  CHECK(moving_average(v, 1) == v);
  const auto e = moving_average({1, 2, 3}, 5);
  CHECK(e[0] == doctest::Approx(2.0));
  CHECK_THROWS_AS(moving_average(v, 4), ParameterError);
}

TEST_CASE("SweepConfig validation") {
  SweepConfig c;
  CHECK_NOTHROW(c.validate());
  c.n = 0;
  CHECK_THROWS_AS(c.validate(), ParameterError);
  c = {};
  c.m = 2;
  CHECK_THROWS_AS(c.validate(), ParameterError);
  c = {};
  c.sweeps = 0;
  CHECK_THROWS_AS(c.validate(), ParameterError);
  c = {};
  c.n = 3;
  c.sweeps = 4;
  CHECK_THROWS_AS(c.validate(), ParameterError);
  c = {};
  c.ma_window = 4;
  CHECK_THROWS_AS(c.validate(), ParameterError);
}

TEST_CASE("parallel_for visits every index and rethrows") {
  std::vector<int> hit(1000, 0);
  parallel_for(hit.size(), 4, [&](std::size_t i) { hit[i] += 1; });
  CHECK(std::all_of(hit.begin(), hit.end(), [](int h) { return h == 1; }));
  CHECK_THROWS_AS(parallel_for(10, 3, [](std::size_t i) { if (i == 7) throw ParameterError("x"); }),
                  ParameterError);
}

TEST_CASE("basic algorithm on the tridiagonal symbol approximates [-2, 2]") {
  const LimitSetResult res = compute_basic(tridiagonal(), 50, 512);
  const Box box = res.superset.bounding_box();
  CHECK(box.xmin <= -2.0);
  CHECK(box.xmax >= 2.0);
  for (double x = -1.9; x <= 1.9; x += 0.1) CHECK(contains(res.superset, {x, 0.0}));
  CHECK(!contains(res.superset, {0.0, 0.5}));
  const double a50 = area(res.polygon);
  const double a200 = area(compute_basic(tridiagonal(), 200, 512).polygon);
  CHECK(a200 < a50);
  CHECK(covers(res.superset, res.polygon, 1e-9));
}

TEST_CASE("n = 1 intersects two spectra") {
  const LimitSetResult res = compute_basic(star(), 1, 4);
  CHECK(res.diagnostics.rhos.size() == 2);
  CHECK(res.polygon.rings().size() == 1);
  CHECK(res.polygon.rings().front().size() == 4);
}

TEST_CASE("star superset contains the arm tips") {
  const LimitSetResult res = compute_basic(star(), 200, 1000);
  for (int k = 0; k < 5; ++k) {
    const double a = 2 * std::numbers::pi * k / 5;
    CHECK(contains(res.superset, {oracle::star_arm() * std::cos(a), oracle::star_arm() * std::sin(a)}));
  }
  CHECK(contains(res.superset, {0.0, 0.0}));
}

TEST_CASE("monotone areas and superset invariant") {
  SweepConfig cfg;
  cfg.n = 60;
  cfg.m = 300;
  cfg.l = 40;
  cfg.sweeps = 3;
  const LaurentSymbol b = star();
  const LimitSetResult res = compute_sweep(b, cfg);
  const auto& d = res.diagnostics;
  CHECK(d.rhos.size() == 61);
  CHECK(d.vertex_counts.size() == 61);
  CHECK(d.polygon_areas.size() == 3);
  CHECK(d.intervals.size() == 2);
  for (std::size_t i = 1; i < d.polygon_areas.size(); ++i) {
    CHECK(d.polygon_areas[i] <= d.polygon_areas[i - 1] + 1e-9);
    CHECK(d.superset_areas[i] <= d.superset_areas[i - 1] + 1e-9);
  }
  CHECK(covers(res.superset, res.polygon, 1e-9));
  for (const auto& round : d.intervals) {
    for (const auto& [lo, hi] : round) {
      CHECK(lo >= d.interval.rho_l);
      CHECK(hi <= d.interval.rho_h);
      CHECK(lo <= hi);
    }
  }
  const SubsetPoints sub = subset(b, 50);
  for (const auto& z : sub.points) CHECK(contains(res.superset, {z.real(), z.imag()}));
}

TEST_CASE("one sweep equals the basic algorithm") {
  SweepConfig cfg;
  cfg.n = 40;
  cfg.m = 200;
  cfg.sweeps = 1;
  const LimitSetResult a = compute_sweep(star(), cfg);
  const LimitSetResult b = compute_basic(star(), cfg);
  CHECK(same_region(a.polygon, b.polygon));
  CHECK(same_region(a.superset, b.superset));
  CHECK(a.diagnostics.rhos == b.diagnostics.rhos);
}

TEST_CASE("determinism across runs and thread counts") {
  SweepConfig cfg;
  cfg.n = 40;
  cfg.m = 200;
  cfg.l = 30;
  cfg.sweeps = 2;
  cfg.seed = 7;
  cfg.threads = 1;
  const LimitSetResult a = compute_sweep(star(), cfg);
  cfg.threads = 3;
  const LimitSetResult b = compute_sweep(star(), cfg);
  CHECK(same_region(a.polygon, b.polygon));
  CHECK(same_region(a.superset, b.superset));
  CHECK(a.diagnostics.rhos == b.diagnostics.rhos);
  CHECK(a.diagnostics.vertex_counts == b.diagnostics.vertex_counts);
  CHECK(a.diagnostics.intervals == b.diagnostics.intervals);
  cfg.seed = 8;
  const LimitSetResult c = compute_sweep(star(), cfg);
  CHECK(c.diagnostics.intervals != a.diagnostics.intervals);
}

TEST_CASE("cached sweep scores never grow on recomputation") {
  // Area reduction for a fixed rho against a shrinking polygon is non-increasing.
  const LaurentSymbol b = star();
  const RhoInterval iv = rho_bounds(b);
  const FixedPointFrame frame = working_frame(b, iv, 200);
  const Partition vs = uniform_angles(200);
  Region poly = region(discretize(b, iv.rho_l, vs), frame);
  const auto probes = sample_rhos(iv, 15, RhoSampling::uniform).points;
  std::vector<double> last(probes.size(), INFINITY);
  for (double rho : sample_rhos(iv, 8, RhoSampling::inverse).points) {
    poly = intersect(poly, region(discretize(b, rho, vs), frame));
    const double base = area(poly);
    for (std::size_t k = 0; k < probes.size(); ++k) {
      const double score = base - area(intersect(poly, region(discretize(b, probes[k], vs), frame)));
      CHECK(score <= last[k] + 1e-9);
      last[k] = score;
    }
  }
}

TEST_CASE("empty regions are legal intermediate states") {
  // a coarse triangle discretization of the star can lose everything; this must not throw
  SweepConfig cfg;
  cfg.n = 5;
  cfg.m = 3;
  cfg.l = 5;
  cfg.sweeps = 2;
  CHECK_NOTHROW(compute_sweep(star(), cfg));
}
