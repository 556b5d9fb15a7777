// One PASS/FAIL line per acceptance criterion. `--only N` runs a single criterion.

#include <chrono>
#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <numbers>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "../support/oracles.hpp"
#include "toeplitz/algebraic.hpp"
#include "toeplitz/cli.hpp"
#include "toeplitz/hausdorff.hpp"
#include "toeplitz/limitset.hpp"
#include "toeplitz/spectrum.hpp"

using namespace toeplitz;

namespace {

LaurentSymbol star() { return LaurentSymbol({{-4, 1.0}, {1, 1.0}}); }

LaurentSymbol main_example() {
  return LaurentSymbol({{-1, -2.0}, {0, Complex(4, -4)}, {1, Complex(0, 7)}, {2, Complex(-3, -3)}, {3, 1.0}});
}

LaurentSymbol random_pol() {
  return LaurentSymbol({{5, Complex(-0.304, 5.958)},
                        {4, Complex(-6.954, 8.098)},
                        {3, Complex(-0.016, -6.911)},
                        {2, Complex(-7.017, -8.355)},
                        {1, Complex(1.766, 9.48)},
                        {0, Complex(-9.161, -6.354)},
                        {-1, Complex(-3.186, 6.321)},
                        {-2, Complex(-5.482, 0.833)},
                        {-3, Complex(-8.159, -5.271)},
                        {-4, Complex(4.942, 4.362)},
                        {-5, Complex(-7.786, -5.305)}});
}

struct Outcome {
  bool pass = true;
  std::ostringstream detail;

  void require(bool ok, const std::string& what) {
    if (!ok) {
      pass = false;
      detail << " [failed: " << what << "]";
    }
  }
};

class Stopwatch {
 public:
  double seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
  }

 private:
  std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

void runtime(Outcome& o, const Stopwatch& w, double limit) {
  const double t = w.seconds();
  o.detail << " time=" << t << "s";
  o.require(t <= limit, "runtime limit " + std::to_string(limit) + " s");
}

Outcome rho_bounds_criterion() {
  Outcome o;
  Stopwatch w;
  const RhoInterval iv = rho_bounds(star());
  const double lo = oracle::bisect([](double x) { return std::pow(x, 5) + 2 * std::pow(x, 4) - 1; }, 0.5, 1.0);
  const double hi = oracle::bisect([](double x) { return std::pow(x, 5) - 2 * std::pow(x, 4) - 1; }, 1.5, 3.0);
  o.detail.precision(10);
  o.detail << "rho_l=" << iv.rho_l << " oracle=" << lo << " rho_h=" << iv.rho_h << " oracle=" << hi;
  o.require(std::abs(iv.rho_l - lo) <= 1e-6, "rho_l");
  o.require(std::abs(iv.rho_h - hi) <= 1e-6, "rho_h");
  runtime(o, w, 1.0);
  return o;
}

Outcome star_ground_truth() {
  Outcome o;
  Stopwatch w;
  const LimitSetResult res = compute_basic(star(), 500, 2000);
  const Region& sup = res.superset;
  const double arm = oracle::star_arm();
  int inside = 0;
  for (int k = 0; k < 5; ++k) {
    const double a = 2 * std::numbers::pi * k / 5;
    for (int j = 0; j < 100; ++j) {
      const double r = arm * j / 99.0;
      inside += contains(sup, {r * std::cos(a), r * std::sin(a)}) ? 1 : 0;
    }
  }
  double farthest = 0.0;
  const Box box = sup.bounding_box();
  for (int i = 0; i < 200; ++i) {
    for (int j = 0; j < 200; ++j) {
      const Point p{box.xmin + (box.xmax - box.xmin) * (i + 0.5) / 200, box.ymin + (box.ymax - box.ymin) * (j + 0.5) / 200};
      if (contains(sup, p)) farthest = std::max(farthest, oracle::star_distance(p));
    }
  }
  o.detail << "arm points inside=" << inside << "/500 farthest grid point=" << farthest;
  o.require(inside == 500, "arm containment");
  o.require(farthest <= 0.15, "distance to star");
  runtime(o, w, 300.0);
  return o;
}

Outcome convergence_trend() {
  Outcome o;
  Stopwatch w;
  const auto segments = oracle::star_segments();
  std::vector<double> ns{100, 200, 400, 800}, ds;
  for (double n : ns) {
    const LimitSetResult res = compute_basic(star(), static_cast<int>(n), 2000);
    ds.push_back(segment_distance_bound(segments, res.superset).r_star);
    o.detail << " d(" << n << ")=" << ds.back();
  }
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (std::size_t k = 0; k < ns.size(); ++k) {
    const double x = std::log(ns[k]), y = std::log(ds[k]);
    sx += x;
    sy += y;
    sxx += x * x;
    sxy += x * y;
  }
  const double m = static_cast<double>(ns.size());
  const double slope = (m * sxy - sx * sy) / (m * sxx - sx * sx);
  o.detail << " slope=" << slope;
  for (std::size_t k = 1; k < ds.size(); ++k) o.require(ds[k] <= ds[k - 1], "non-increasing");
  o.require(slope >= -1.3 && slope <= -0.55, "slope range");
  runtime(o, w, 1200.0);
  return o;
}

Outcome main_certificate() {
  Outcome o;
  Stopwatch w;
  const LaurentSymbol b = main_example();
  SweepConfig basic;
  basic.n = 1250;
  basic.m = 1000;
  SweepConfig sweep;
  sweep.n = 1000;
  sweep.m = 1000;
  sweep.l = 250;
  sweep.sweeps = 2;
  const Certificate c1 = error_certificate(b, basic, 2000);
  const Certificate c2 = error_certificate(b, sweep, 2000);
  o.detail << "basic r_star=" << c1.bound.r_star << " sweep r_star=" << c2.bound.r_star;
  o.require(c1.bound.r_star >= 0.02 && c1.bound.r_star <= 0.09, "basic range");
  o.require(c2.bound.r_star >= 0.015 && c2.bound.r_star <= 0.07, "sweep range");
  o.require(c2.bound.r_star <= c1.bound.r_star, "sweep not worse");
  o.require(c1.bound.subset_contained && c2.bound.subset_contained, "subset inside superset");
  runtime(o, w, 900.0);
  return o;
}

// Largest sampled distance from the unit circle to the region boundary set.
double disk_distance(const Region& r, int samples) {
  const auto rings = r.user_rings();
  double worst = 0.0;
  for (int k = 0; k < samples; ++k) {
    const double a = 2 * std::numbers::pi * (k + 0.5) / samples;
    const Point p{std::cos(a), std::sin(a)};
    if (oracle::angle_winding(rings, p) == 0) worst = std::max(worst, oracle::distance_to_rings(rings, p));
  }
  return worst;
}

Outcome discretization_bound() {
  Outcome o;
  Stopwatch w;
  // b = t with a negligible t^-1 term so the symbol stays two-sided.
  const LaurentSymbol b({{-1, 1e-300}, {1, 1.0}});
  for (int m : {64, 256}) {
    const double exact = 1 - std::cos(std::numbers::pi / m);
    const SpectrumPolygon sp = discretize(b, 1.0, uniform_angles(m));
    const double c = second_derivative_bound(b, 1.0);
    const double direct = disk_distance(region(sp), 64 * m);
    // the same spectrum in the frame and with the expansion the sampler uses
    const FixedPointFrame frame = working_frame(b, rho_bounds(b), m);
    const double through = disk_distance(region(sp, frame), 64 * m);
    const Region grown = expanded(sp, b, frame);
    bool disk_inside = true;
    for (int k = 0; k < 16 * m; ++k) {
      const double a = 2 * std::numbers::pi * k / (16 * m);
      disk_inside = disk_inside && contains(grown, {std::cos(a), std::sin(a)});
    }
    o.require(disk_inside, "expanded spectrum contains the circle");
    o.detail << " m=" << m << " exact=" << exact << " module=" << direct << " pipeline=" << through
             << " C*dv^2=" << c * sp.delta_v * sp.delta_v;
    o.require(std::abs(direct - exact) <= 1e-3 * exact, "module-level distance");
    o.require(std::abs(through - exact) <= 1e-3 * exact, "pipeline distance");
    o.require(exact <= c * sp.delta_v * sp.delta_v, "curvature bound");
  }
  runtime(o, w, 10.0);
  return o;
}

Outcome subset_soundness() {
  Outcome o;
  Stopwatch w;
  const SubsetPoints sub = subset(star(), 1000);
  const std::vector<std::pair<int, Complex>> terms{{-4, 1.0}, {1, 1.0}};
  double worst_gap = 0.0, maxmod = 0.0;
  for (const Complex& z : sub.points) {
    worst_gap = std::max(worst_gap, oracle::root_gap(terms, 4, z));
    maxmod = std::max(maxmod, std::abs(z));
  }
  o.detail << "points=" << sub.points.size() << " worst independent gap=" << worst_gap << " max modulus=" << maxmod
           << " arm=" << oracle::star_arm();
  o.require(!sub.points.empty(), "nonempty");
  o.require(worst_gap <= sub.tol, "independent membership");
  o.require(std::abs(maxmod - oracle::star_arm()) <= 1e-6, "arm length");
  runtime(o, w, 60.0);
  return o;
}

Outcome hausdorff_sandwich() {
  Outcome o;
  Stopwatch w;
  Ring disk;
  for (int k = 0; k < 1024; ++k) {
    const double a = 2 * std::numbers::pi * k / 1024;
    disk.push_back({std::cos(a), std::sin(a)});
  }
  const std::vector<Point> origin{{0, 0}};
  const Region sup = Region::from_rings({disk});
  // The disk is the extremal case of the sandwich, so the bisection slack is kept below
  // the gap between the 1024-gon and the unit circle.
  const DistanceBound d = distance_bound(origin, sup, 20, 1e-6);
  const DistanceBound coarse = distance_bound(origin, sup, 20);
  o.detail.precision(8);
  o.detail << "r_star=" << d.r_star << " lower=" << d.lower << " (search tolerance 1e-3: r_star=" << coarse.r_star
           << " lower=" << coarse.lower << ")";
  o.require(d.lower <= 1.0 && 1.0 <= d.r_star, "true distance 1 in [lower, r_star]");
  o.require(coarse.r_star >= 1.0, "upper bound at the default tolerance");
  runtime(o, w, 30.0);
  return o;
}

Outcome geometry_oracles() {
  Outcome o;
  Stopwatch w;
  std::mt19937_64 rng(8);
  const int grid = 100;
  const double pitch = 1.0 / grid;
  long disagreements = 0, probes = 0;
  for (int trial = 0; trial < 200; ++trial) {
    const Ring ra = oracle::random_polygon(rng), rb = oracle::random_polygon(rng);
    const auto ab = intersect(Region::from_rings({ra}), Region::from_rings({rb})).user_rings();
    for (int i = 0; i < grid; ++i) {
      for (int j = 0; j < grid; ++j) {
        const Point p{(i + 0.5) * pitch, (j + 0.5) * pitch};
        if (oracle::distance_to_rings({ra, rb}, p) < 2 * pitch) continue;
        ++probes;
        const bool expect = oracle::angle_winding(ra, p) != 0 && oracle::angle_winding(rb, p) != 0;
        if ((oracle::angle_winding(ab, p) != 0) != expect) ++disagreements;
      }
    }
  }
  o.detail << "intersect probes=" << probes << " disagreements=" << disagreements;
  o.require(disagreements == 0, "intersect rasterization");

  std::uniform_real_distribution<double> u(-0.3, 1.3), frac(0, 1);
  long inner_miss = 0, outer_hit = 0, monotone_fail = 0;
  for (int trial = 0; trial < 50; ++trial) {
    const Ring r = oracle::random_polygon(rng);
    const Region base = Region::from_rings({r});
    const auto rings = base.user_rings();
    const double delta = 0.02 + 0.05 * frac(rng);
    const Region off = offset_outward(base, delta, 2 * delta);
    for (int k = 0; k < 400; ++k) {
      const Point p{u(rng), u(rng)};
      const double d = oracle::angle_winding(rings, p) != 0 ? 0.0 : oracle::distance_to_rings(rings, p);
      if (d <= delta * (1 - 1e-6) && !contains(off, p)) ++inner_miss;
      if (d >= 2 * delta * (1 + 1e-6) && contains(off, p)) ++outer_hit;
    }
    if (!covers(offset_outward(base, 1.5 * delta, 3 * delta), off, 1e-12)) ++monotone_fail;
  }
  o.detail << " offset inner misses=" << inner_miss << " outer hits=" << outer_hit << " monotone failures=" << monotone_fail;
  o.require(inner_miss == 0 && outer_hit == 0, "offset double inclusion");
  o.require(monotone_fail == 0, "offset monotonicity");
  runtime(o, w, 120.0);
  return o;
}

Outcome vertex_growth() {
  Outcome o;
  Stopwatch w;
  SweepConfig cfg;
  cfg.m = 500;
  cfg.n = 3000;
  cfg.l = 500;
  cfg.sweeps = 6;
  cfg.rho_sampling = RhoSampling::uniform;
  const LimitSetResult res = compute_sweep(random_pol(), cfg);
  const auto& wv = res.diagnostics.vertex_counts;
  const double n = static_cast<double>(wv.size());
  double sx = 0, sy = 0, sxx = 0, sxy = 0, lo = INFINITY, hi = -INFINITY;
  for (std::size_t i = 0; i < wv.size(); ++i) {
    const double x = static_cast<double>(i), y = static_cast<double>(wv[i]);
    sx += x;
    sy += y;
    sxx += x * x;
    sxy += x * y;
    lo = std::min(lo, y);
    hi = std::max(hi, y);
  }
  const double slope = (n * sxy - sx * sy) / (n * sxx - sx * sx);
  const double icpt = (sy - slope * sx) / n;
  double ss = 0.0;
  for (std::size_t i = 0; i < wv.size(); ++i) {
    const double e = static_cast<double>(wv[i]) - (icpt + slope * static_cast<double>(i));
    ss += e * e;
  }
  const double ratio = hi > lo ? std::sqrt(ss / n) / (hi - lo) : 0.0;
  o.detail << "samples=" << wv.size() << " fit=" << icpt << "+" << slope << "*i w range=[" << lo << "," << hi
           << "] rms residual/range=" << ratio;
  o.require(ratio <= 0.25, "residual-to-range ratio");
  runtime(o, w, 1800.0);
  return o;
}

Outcome determinism() {
  Outcome o;
  Stopwatch w;
  const std::string path = (std::filesystem::temp_directory_path() / "toeplitz_acceptance_star.json").string();
  std::ofstream(path) << R"({"terms": [{"n": -4, "re": 1.0, "im": 0.0}, {"n": 1, "re": 1.0, "im": 0.0}]})";
  const std::vector<std::string> args{"limitset", "certify", "--symbol", path, "--n", "200", "--m", "500", "--l", "100",
                                      "--sweeps", "3", "--phi-count", "300", "--seed", "11"};
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::string first, second;
  for (std::string* target : {&first, &second}) {
    std::ostringstream out, err;
    const int code = run(static_cast<int>(argv.size()), argv.data(), out, err);
    o.require(code == 0, "exit code");
    *target = out.str();
  }
  o.detail << "bytes=" << first.size();
  o.require(!first.empty() && first == second, "byte-identical certificate JSON");
  return o;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"acceptance criteria"};
  int only = 0;
  app.add_option("--only", only, "run a single criterion (1-10)")->check(CLI::Range(1, 10));
  CLI11_PARSE(app, argc, argv);

  const std::map<int, std::pair<std::string, std::function<Outcome()>>> criteria{
      {1, {"rho bounds", rho_bounds_criterion}},
      {2, {"star ground truth", star_ground_truth}},
      {3, {"convergence trend", convergence_trend}},
      {4, {"main example certificate", main_certificate}},
      {5, {"discretization error bound", discretization_bound}},
      {6, {"subset soundness", subset_soundness}},
      {7, {"hausdorff sandwich", hausdorff_sandwich}},
      {8, {"geometry oracle suite", geometry_oracles}},
      {9, {"vertex growth linearity", vertex_growth}},
      {10, {"determinism", determinism}},
  };
  bool all = true;
  for (const auto& [id, entry] : criteria) {
    if (only != 0 && id != only) continue;
    Outcome outcome;
    try {
      outcome = entry.second();
    } catch (const std::exception& e) {
      outcome.pass = false;
      outcome.detail << "exception: " << e.what();
    }
    std::cout << (outcome.pass ? "PASS" : "FAIL") << " criterion " << id << " (" << entry.first
              << "): " << outcome.detail.str() << std::endl;
    all = all && outcome.pass;
  }
  return all ? EXIT_SUCCESS : EXIT_FAILURE;
}
