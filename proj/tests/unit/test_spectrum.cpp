#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "../support/oracles.hpp"
#include "toeplitz/errors.hpp"
#include "toeplitz/spectrum.hpp"

using namespace toeplitz;

namespace {

LaurentSymbol star() { return LaurentSymbol({{-4, 1.0}, {1, 1.0}}); }
// b = t embedded in a valid two-sided symbol; the t^-1 term is far below double resolution on |t| = 1.
LaurentSymbol identity_like() { return LaurentSymbol({{-1, 1e-300}, {1, 1.0}}); }

double disk_region_distance(const Region& r, int samples) {
  // Hausdorff distance between the closed unit disk and a region inside it, sampled on the circle.
  const auto rings = r.user_rings();
  double worst = 0.0;
  for (int k = 0; k < samples; ++k) {
    const double a = 2 * std::numbers::pi * (k + 0.5) / samples;
    worst = std::max(worst, oracle::distance_to_rings(rings, {std::cos(a), std::sin(a)}));
  }
  return worst;
}

}  // namespace

TEST_CASE("partitions") {
  const Partition p = Partition::uniform(1.0, 2.0, 3);
  CHECK(p.points == std::vector<double>{1.0, 1.5, 2.0});
  CHECK(p.granularity() == doctest::Approx(0.5));
  CHECK(Partition::uniform(1.0, 2.0, 1).points == std::vector<double>{1.5});
  CHECK_THROWS_AS(Partition::uniform(0, 1, 0), ParameterError);
  const Partition v = uniform_angles(8);
  CHECK(v.points.size() == 9);
  CHECK(v.points.front() == 0.0);
  CHECK(v.points.back() == doctest::Approx(2 * std::numbers::pi));
  CHECK(v.granularity() == doctest::Approx(2 * std::numbers::pi / 8));
  CHECK_THROWS_AS(uniform_angles(2), DegenerateInputError);
}

TEST_CASE("rho_bounds matches bisection oracles") {
  const RhoInterval iv = rho_bounds(star());
  const double lo = oracle::bisect([](double x) { return std::pow(x, 5) + 2 * std::pow(x, 4) - 1; }, 0.5, 1.0);
  const double hi = oracle::bisect([](double x) { return std::pow(x, 5) - 2 * std::pow(x, 4) - 1; }, 1.5, 3.0);
  CHECK(std::abs(iv.rho_l - lo) < 1e-9);
  CHECK(std::abs(iv.rho_h - hi) < 1e-9);

  const RhoInterval sym = rho_bounds(LaurentSymbol({{-1, 1.0}, {1, 1.0}}));
  CHECK(sym.rho_l * sym.rho_h == doctest::Approx(1.0).epsilon(1e-10));

  const RhoInterval ten = rho_bounds(LaurentSymbol({{-1, 10.0}, {1, 10.0}}));
  CHECK(ten.rho_l == doctest::Approx(std::sqrt(2.0) - 1).epsilon(1e-10));
  CHECK(ten.rho_h == doctest::Approx(std::sqrt(2.0) + 1).epsilon(1e-10));
}

TEST_CASE("rho_bounds property: scaled spectra outside the interval miss the K-disk") {
  std::mt19937_64 rng(31);
  std::uniform_real_distribution<double> c(-1, 1);
  for (int trial = 0; trial < 30; ++trial) {
    std::map<int, Complex> t;
    const int r = 1 + trial % 3, s = 1 + (trial / 3) % 3;
    for (int n = -r; n <= s; ++n) t[n] = Complex(c(rng), c(rng));
    const LaurentSymbol b(t);
    const RhoInterval iv = rho_bounds(b);
    CHECK(iv.rho_l <= 1.0);
    CHECK(iv.rho_h >= 1.0);
    CHECK(iv.rho_l > 0.0);
    const double k = coeff_sup_bound(b);
    std::uniform_real_distribution<double> unit(-0.7, 0.7);
    for (double rho : {iv.rho_l * 0.95, iv.rho_h * 1.05}) {
      if ((rho < 1.0 && iv.rho_l == 1.0) || (rho > 1.0 && iv.rho_h == 1.0)) continue;
      const SpectrumPolygon sp = discretize(b, rho, uniform_angles(2000));
      for (const auto& p : sp.ring) CHECK(std::hypot(p.x, p.y) > k);
      for (int j = 0; j < 5; ++j) {
        const Point lam{k * unit(rng), k * unit(rng)};
        CHECK(oracle::angle_winding(sp.ring, lam) != 0);
      }
    }
  }
}

TEST_CASE("discretize") {
  const LaurentSymbol b = identity_like();
  const SpectrumPolygon sp = discretize(b, 1.0, uniform_angles(4));
  REQUIRE(sp.ring.size() == 4);
  CHECK(std::abs(sp.ring[0].x - 1) < 1e-15);
  CHECK(std::abs(sp.ring[1].y - 1) < 1e-15);
  CHECK(sp.delta_v == doctest::Approx(std::numbers::pi / 2));
  const Region sq = region(sp);
  CHECK(area(sq) == doctest::Approx(2.0).epsilon(1e-9));
  CHECK(winding_number(sq, {0, 0}) == 1);

  const LaurentSymbol inv({{-1, 1.0}, {1, 1e-300}});
  CHECK(winding_number(region(discretize(inv, 1.0, uniform_angles(4))), {0, 0}) == -1);

  const SpectrumPolygon s = discretize(star(), 1.3, uniform_angles(50));
  for (std::size_t j = 0; j < s.ring.size(); ++j) {
    const Complex z = eval(star(), std::polar(1.3, 2 * std::numbers::pi * j / 50));
    CHECK(s.ring[j] == Point{z.real(), z.imag()});
  }
  CHECK_THROWS_AS(discretize(b, 1.0, Partition{{0.0, 1.0, 2.0}}), DegenerateInputError);
  CHECK_THROWS_AS(discretize(b, 0.0, uniform_angles(8)), DomainError);
}

TEST_CASE("discretization error bound for the identity symbol") {
  const LaurentSymbol b = identity_like();
  for (int m : {64, 256}) {
    const SpectrumPolygon sp = discretize(b, 1.0, uniform_angles(m));
    const double exact = 1 - std::cos(std::numbers::pi / m);
    const double measured = disk_region_distance(region(sp), 4 * m);
    CHECK(measured == doctest::Approx(exact).epsilon(1e-3));
    CHECK(exact <= second_derivative_bound(b, 1.0) * sp.delta_v * sp.delta_v);
  }
}

TEST_CASE("expanded contains the disk") {
  const LaurentSymbol b = identity_like();
  for (int m : {8, 64}) {
    const SpectrumPolygon sp = discretize(b, 1.0, uniform_angles(m));
    const double delta = expansion_radius(sp, b);
    CHECK(delta == doctest::Approx(2 * std::pow(2 * std::numbers::pi / m, 2)).epsilon(1e-9));
    const Region p = expanded(sp, b);
    for (int k = 0; k < 720; ++k) {
      const double a = 2 * std::numbers::pi * k / 720;
      for (double rad : {0.0, 0.5, 1.0}) CHECK(contains(p, {rad * std::cos(a), rad * std::sin(a)}));
    }
    CHECK(covers(p, region(sp), 1e-12));
  }
  const SpectrumPolygon tri = discretize(star(), 1.0, uniform_angles(3));
  CHECK(covers(expanded(tri, star()), region(tri), 1e-12));
}

TEST_CASE("expanded covers the polygon for random symbols") {
  std::mt19937_64 rng(32);
  std::uniform_real_distribution<double> c(-1, 1), rho(0.6, 1.6);
  for (int trial = 0; trial < 10; ++trial) {
    std::map<int, Complex> t;
    for (int n = -2; n <= 2; ++n) t[n] = Complex(c(rng), c(rng));
    const LaurentSymbol b(t);
    const SpectrumPolygon sp = discretize(b, rho(rng), uniform_angles(200));
    const Region e = expanded(sp, b);
    CHECK(covers(e, region(sp), 1e-12));
    // the exact curve lies inside
    for (int k = 0; k < 1000; ++k) {
      const Complex z = eval(b, std::polar(sp.rho, 2 * std::numbers::pi * (k + 0.37) / 1000));
      CHECK(contains(e, {z.real(), z.imag()}));
    }
  }
}

TEST_CASE("region is invariant under rotation of the partition start") {
  const LaurentSymbol b = star();
  const int m = 64;
  const SpectrumPolygon sp = discretize(b, 1.1, uniform_angles(m));
  SpectrumPolygon rotated = sp;
  std::rotate(rotated.ring.begin(), rotated.ring.begin() + 17, rotated.ring.end());
  CHECK(area(symmetric_difference(region(sp), region(rotated))) <= 1e-6);
}

TEST_CASE("symbol_extent bounds every scaled curve") {
  const LaurentSymbol b = star();
  const RhoInterval iv = rho_bounds(b);
  const Box box = symbol_extent(b, iv);
  for (double rho : {iv.rho_l, 1.0, iv.rho_h}) {
    for (const auto& p : discretize(b, rho, uniform_angles(100)).ring) {
      CHECK(p.x >= box.xmin);
      CHECK(p.x <= box.xmax);
      CHECK(p.y >= box.ymin);
      CHECK(p.y <= box.ymax);
    }
  }
}
