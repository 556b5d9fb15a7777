#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>

#include "../support/oracles.hpp"
#include "toeplitz/errors.hpp"
#include "toeplitz/roots.hpp"

using namespace toeplitz;

namespace {

bool has_root(const RootSet& rs, Complex z, double tol) {
  return std::any_of(rs.roots.begin(), rs.roots.end(), [&](Complex w) { return std::abs(w - z) <= tol; });
}

// Coefficients of prod (z - roots[k]), ascending.
std::vector<Complex> expand(const std::vector<Complex>& roots, Complex lead) {
  std::vector<Complex> c{lead};
  for (const Complex& r : roots) {
    std::vector<Complex> next(c.size() + 1);
    for (std::size_t k = 0; k < c.size(); ++k) {
      next[k + 1] += c[k];
      next[k] -= r * c[k];
    }
    c = std::move(next);
  }
  return c;
}

}  // namespace

TEST_CASE("all_roots on known polynomials") {
  const std::vector<Complex> p1{1, 0, 1};
  const RootSet a = all_roots(p1);
  REQUIRE(a.roots.size() == 2);
  CHECK(has_root(a, Complex(0, 1), 1e-12));
  CHECK(has_root(a, Complex(0, -1), 1e-12));

  const std::vector<Complex> p2{1, 0, 0, 0, 0, 1};
  const RootSet b = all_roots(p2);
  REQUIRE(b.roots.size() == 5);
  for (int k = 0; k < 5; ++k) CHECK(has_root(b, std::polar(1.0, std::numbers::pi * (2 * k + 1) / 5), 1e-12));

  const std::vector<Complex> p3{-6, 11, -6, 1};
  const RootSet c = all_roots(p3);
  for (double x : {1.0, 2.0, 3.0}) CHECK(has_root(c, x, 1e-10));
  CHECK(c.relative_residual <= 1e-10);
}

TEST_CASE("coefficient stripping") {
  const std::vector<Complex> lead{-1, 1, 1e-20};
  CHECK(all_roots(lead).roots.size() == 1);
  const std::vector<Complex> trail{0, 0, -1, 1};
  const RootSet rs = all_roots(trail);
  REQUIRE(rs.roots.size() == 3);
  CHECK(std::count(rs.roots.begin(), rs.roots.end(), Complex{}) == 2);
  CHECK(has_root(rs, 1.0, 1e-14));
  const std::vector<Complex> constant{3, 0, 1e-16};
  CHECK_THROWS_AS(all_roots(constant), DegenerateInputError);
  const std::vector<Complex> bad{1, NAN};
  CHECK_THROWS_AS(all_roots(bad), DomainError);
}

TEST_CASE("convergence failure carries the best iterate") {
  RootOptions opt;
  opt.max_iterations = 0;
  const std::vector<Complex> p{-6, 11, -6, 1};
  try {
    all_roots(p, opt);
    FAIL("expected ConvergenceError");
  } catch (const ConvergenceError& e) {
    CHECK(e.best_iterate().size() == 3);
    CHECK(e.relative_residual() > 1e-10);
  }
}

TEST_CASE("random polynomials reconstruct their coefficients") {
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<int> deg(1, 20);
  std::uniform_real_distribution<double> rad(0.0, 1.0), ang(0.0, 2 * std::numbers::pi);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = deg(rng);
    std::vector<Complex> c(static_cast<std::size_t>(n) + 1);
    for (auto& x : c) x = std::polar(rad(rng), ang(rng));
    c.back() = std::polar(0.1 + 0.9 * rad(rng), ang(rng));
    const RootSet rs = all_roots(c);
    REQUIRE(rs.roots.size() == static_cast<std::size_t>(n));
    const auto back = expand(rs.roots, c.back());
    double scale = 0.0;
    for (const auto& x : c) scale = std::max(scale, std::abs(x));
    for (std::size_t k = 0; k < c.size(); ++k) CHECK(std::abs(back[k] - c[k]) <= 1e-6 * scale);
    CHECK(rs.relative_residual <= 1e-10);

    const RootSet again = all_roots(c);
    CHECK(again.roots == rs.roots);
  }
}

TEST_CASE("high degree") {
  // 1 + z^400: roots on the unit circle
  std::vector<Complex> c(401);
  c[0] = 1;
  c[400] = 1;
  const RootSet rs = all_roots(c);
  REQUIRE(rs.roots.size() == 400);
  for (const auto& z : rs.roots) CHECK(std::abs(std::abs(z) - 1.0) < 1e-12);
}

TEST_CASE("positive_real_roots") {
  const std::vector<double> lower{-1, 0, 0, 0, 2, 1};
  const std::vector<double> upper{-1, 0, 0, 0, -2, 1};
  const double lo = oracle::bisect([](double x) { return std::pow(x, 5) + 2 * std::pow(x, 4) - 1; }, 0.7, 0.8);
  const double hi = oracle::bisect([](double x) { return std::pow(x, 5) - 2 * std::pow(x, 4) - 1; }, 2.0, 2.1);
  const auto a = positive_real_roots(lower);
  REQUIRE(a.size() == 1);
  CHECK(std::abs(a.front() - lo) < 1e-12);
  const auto b = positive_real_roots(upper);
  REQUIRE(b.size() == 1);
  CHECK(std::abs(b.back() - hi) < 1e-12);
  const std::vector<double> none{1, 0, 1};
  CHECK(positive_real_roots(none).empty());

  std::mt19937_64 rng(12);
  std::uniform_real_distribution<double> u(-1, 1);
  for (int trial = 0; trial < 100; ++trial) {
    std::vector<double> p(static_cast<std::size_t>(2 + trial % 9));
    for (auto& x : p) x = u(rng);
    double sum = 0.0;
    for (double x : p) sum += std::abs(x);
    const int degree = static_cast<int>(p.size()) - 1;
    const std::vector<double> roots = positive_real_roots(p);
    CHECK(std::is_sorted(roots.begin(), roots.end()));
    for (double x : roots) {
      double v = 0.0;
      for (std::size_t k = p.size(); k-- > 0;) v = v * x + p[k];
      CHECK(std::abs(v) <= 1e-9 * sum * std::pow(std::max(1.0, x), degree));
    }
  }
}

TEST_CASE("middle_moduli_gap") {
  const std::vector<Complex> p1{1, 0, 0, 0, 0, 1};
  CHECK(middle_moduli_gap(all_roots(p1), 4) < 1e-12);
  const std::vector<Complex> p2{1, -2.5, 1};
  CHECK(middle_moduli_gap(all_roots(p2), 1) == doctest::Approx(1.5).epsilon(1e-12));
  const std::vector<Complex> p3{1, -2, 1};
  CHECK(middle_moduli_gap(all_roots(p3), 1) < 1e-7);
  CHECK_THROWS_AS(middle_moduli_gap(all_roots(p3), 2), std::invalid_argument);
}

TEST_CASE("sorted_by_modulus breaks ties by argument") {
  RootSet rs;
  rs.roots = {Complex(-1, 0), Complex(0, 1), Complex(1, 0), Complex(0.5, 0)};
  const auto s = rs.sorted_by_modulus();
  CHECK(s[0] == Complex(0.5, 0));
  CHECK(s[1] == Complex(1, 0));
  CHECK(s[2] == Complex(0, 1));
  CHECK(s[3] == Complex(-1, 0));
}
