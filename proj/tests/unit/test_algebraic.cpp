#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>
#include <vector>

#include "../support/oracles.hpp"
#include "toeplitz/algebraic.hpp"
#include "toeplitz/errors.hpp"

using namespace toeplitz;

namespace {

LaurentSymbol star() { return LaurentSymbol({{-4, 1.0}, {1, 1.0}}); }
LaurentSymbol tridiagonal() { return LaurentSymbol({{-1, 1.0}, {1, 1.0}}); }

bool near_any(const std::vector<Complex>& pts, Complex z, double tol) {
  return std::any_of(pts.begin(), pts.end(), [&](Complex w) { return std::abs(w - z) <= tol; });
}

}  // namespace

TEST_CASE("membership examples") {
  CHECK(membership(star(), 0.0));
  CHECK(membership(star(), std::polar(1.0, 2 * std::numbers::pi / 5)));
  CHECK(!membership(star(), 3.0));
  CHECK(!membership(star(), std::polar(1.0, std::numbers::pi / 5)));
  CHECK(membership(tridiagonal(), 1.5));
  CHECK(!membership(tridiagonal(), Complex(0, 0.1)));
  CHECK(!membership(tridiagonal(), 2.5));
}

TEST_CASE("membership agrees with the star geometry") {
  std::mt19937_64 rng(41);
  std::uniform_real_distribution<double> u(-2.0, 2.0);
  int checked = 0;
  for (int k = 0; k < 400; ++k) {
    const Point p{u(rng), u(rng)};
    const double d = oracle::star_distance(p);
    if (d < 1e-3) continue;
    CHECK(!membership(star(), Complex(p.x, p.y)));
    ++checked;
  }
  CHECK(checked > 300);
  for (int k = 0; k < 5; ++k) {
    for (double r : {0.1, 0.8, 1.6}) {
      CHECK(oracle::root_gap({{-4, 1.0}, {1, 1.0}}, 4, std::polar(r, 2 * std::numbers::pi * k / 5)) <= 1e-7);
    }
    for (double r : {0.1, 0.8, 1.6}) CHECK(membership(star(), std::polar(r, 2 * std::numbers::pi * k / 5)));
  }
}

TEST_CASE("candidate_points examples") {
  const std::vector<double> half{std::numbers::pi};
  const auto c = candidate_points(tridiagonal(), half);
  CHECK(near_any(c, 0.0, 1e-12));
  // critical values +-2 come from the derivative branch
  CHECK(near_any(c, 2.0, 1e-12));
  CHECK(near_any(c, -2.0, 1e-12));

  const auto tips = candidate_points(star(), std::vector<double>{1.0});
  for (int k = 0; k < 5; ++k) {
    CHECK(near_any(tips, std::polar(oracle::star_arm(), 2 * std::numbers::pi * k / 5), 1e-10));
  }
  CHECK(std::is_sorted(tips.begin(), tips.end(), [](Complex a, Complex b) {
    return a.real() < b.real() || (a.real() == b.real() && a.imag() < b.imag());
  }));
}

TEST_CASE("candidate_points handles degree drops and degenerate angles") {
  // e^{i s phi} = 1 with s = 2: the leading coefficient vanishes
  const LaurentSymbol b({{-1, 1.0}, {1, 0.5}, {2, 1.0}});
  CandidateStats stats;
  const auto c = candidate_points(b, std::vector<double>{std::numbers::pi}, 1, &stats);
  CHECK(stats.degenerate == 0);
  CHECK(!c.empty());
  for (const Complex& lambda : c) CHECK(std::isfinite(lambda.real()));

  // phi = 2 pi makes every coefficient vanish
  CandidateStats all;
  const auto d = candidate_points(tridiagonal(), std::vector<double>{2 * std::numbers::pi}, 1, &all);
  CHECK(all.degenerate == 1);
  CHECK(near_any(d, 2.0, 1e-12));
}

TEST_CASE("subset soundness and star geometry") {
  const SubsetPoints sub = subset(star(), 100);
  REQUIRE(!sub.points.empty());
  CHECK(sub.tol == 1e-7);
  double maxmod = 0.0;
  for (const Complex& z : sub.points) {
    CHECK(oracle::star_distance({z.real(), z.imag()}) <= 1e-6);
    CHECK(membership(star(), z, sub.tol));
    maxmod = std::max(maxmod, std::abs(z));
  }
  CHECK(std::abs(maxmod - oracle::star_arm()) <= 1e-6);
  CHECK_THROWS_AS(subset(star(), 0), ParameterError);
}

TEST_CASE("subset with N = 1 is contained in N = 100") {
  const SubsetPoints one = subset(star(), 1);
  const SubsetPoints hundred = subset(star(), 100);
  for (const Complex& z : one.points) CHECK(near_any(hundred.points, z, 1e-9));
  // certified critical values are present regardless of N
  const auto critical = candidate_points(star(), std::vector<double>{2 * std::numbers::pi});
  int certified = 0;
  for (const Complex& z : critical) {
    if (!membership(star(), z)) continue;
    ++certified;
    CHECK(near_any(one.points, z, 1e-12));
    CHECK(near_any(hundred.points, z, 1e-12));
  }
  CHECK(certified > 0);
}

TEST_CASE("subset soundness for random symbols") {
  std::mt19937_64 rng(42);
  std::uniform_real_distribution<double> c(-1, 1);
  for (int trial = 0; trial < 6; ++trial) {
    std::map<int, Complex> t;
    for (int n = -2; n <= 3; ++n) t[n] = Complex(c(rng), c(rng));
    const LaurentSymbol b(t);
    std::vector<std::pair<int, Complex>> terms(t.begin(), t.end());
    const SubsetPoints sub = subset(b, 20);
    CHECK(!sub.points.empty());
    for (const Complex& z : sub.points) {
      CHECK(membership(b, z, sub.tol));
      CHECK(oracle::root_gap(terms, b.r(), z) <= sub.tol);
    }
  }
}

TEST_CASE("deduplicate") {
  const std::vector<Complex> pts{{1, 0}, {1 + 1e-12, 0}, {0, 1}, {1, 0}, {0, 1 + 5e-10}, {0, 1 + 2e-9}};
  const auto d = deduplicate(pts);
  CHECK(d.size() == 3);
  CHECK(std::is_sorted(d.begin(), d.end(), [](Complex a, Complex b) {
    return a.real() < b.real() || (a.real() == b.real() && a.imag() < b.imag());
  }));
  CHECK(deduplicate({}).empty());
}
