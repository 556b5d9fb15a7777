#include "toeplitz/cli.hpp"

#include <chrono>
#include <filesystem>
#include <iostream>
#include <map>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "toeplitz/algebraic.hpp"
#include "toeplitz/errors.hpp"
#include "toeplitz/hausdorff.hpp"
#include "toeplitz/io.hpp"
#include "toeplitz/limitset.hpp"
#include "toeplitz/spectrum.hpp"

namespace toeplitz {

namespace fs = std::filesystem;

namespace {

struct Options {
  std::string symbol;
  SweepConfig cfg;
  int phi_count = 1000;
  double tol = 1e-7;
  std::string out_dir;
  bool svg = false;
};

void add_common(CLI::App* cmd, Options& o) {
  cmd->add_option("--symbol", o.symbol, "symbol JSON file")->required()->check(CLI::ExistingFile);
}

void add_sampler(CLI::App* cmd, Options& o) {
  cmd->add_option("--n", o.cfg.n, "number of sampled rhos")->check(CLI::PositiveNumber);
  cmd->add_option("--m", o.cfg.m, "number of sampled angles per spectrum")->check(CLI::Range(3, 1 << 24));
  cmd->add_option("--l", o.cfg.l, "sweep grid size")->check(CLI::PositiveNumber);
  cmd->add_option("--sweeps", o.cfg.sweeps, "sampling rounds (1: basic algorithm)")->check(CLI::PositiveNumber);
  cmd->add_option("--seed", o.cfg.seed, "seed for the interval jitter");
  cmd->add_option("--rho-sampling", o.cfg.rho_sampling, "uniform or inverse")
      ->transform(CLI::CheckedTransformer(
          std::map<std::string, RhoSampling>{{"uniform", RhoSampling::uniform}, {"inverse", RhoSampling::inverse}}));
  cmd->add_option("--cbound", o.cfg.cbound, "rigorous or sampled curvature constant")
      ->transform(CLI::CheckedTransformer(std::map<std::string, CurvatureBound>{
          {"rigorous", CurvatureBound::rigorous}, {"sampled", CurvatureBound::sampled}}));
}

void add_subset(CLI::App* cmd, Options& o) {
  cmd->add_option("--phi-count", o.phi_count, "number of sampled angles phi")->check(CLI::PositiveNumber);
  cmd->add_option("--tol", o.tol, "root modulus equality tolerance")->check(CLI::PositiveNumber);
}

void add_output(CLI::App* cmd, Options& o) {
  cmd->add_option("--out", o.out_dir, "output directory (default: primary artifact to stdout)");
  cmd->add_flag("--svg", o.svg, "also write an SVG figure (requires --out)");
}

class Outputs {
 public:
  Outputs(const Options& o, std::ostream& out) : o_(o), out_(out) {
    if (o.svg && o.out_dir.empty()) throw ParameterError("--svg requires --out");
    if (!o.out_dir.empty()) {
      std::error_code ec;
      fs::create_directories(o.out_dir, ec);
      if (ec) throw std::runtime_error("cannot create output directory " + o.out_dir + ": " + ec.message());
    }
  }

  bool to_dir() const { return !o_.out_dir.empty(); }

  void primary(const std::string& name, const std::string& text) {
    if (to_dir()) write_text(fs::path(o_.out_dir) / name, text);
    else out_ << text;
  }

  void extra(const std::string& name, const std::string& text) {
    if (to_dir()) write_text(fs::path(o_.out_dir) / name, text);
  }

 private:
  const Options& o_;
  std::ostream& out_;
};

std::string dump(const nlohmann::json& j) { return j.dump(2) + "\n"; }

std::string points_csv(const std::vector<Complex>& pts) {
  std::ostringstream s;
  write_points_csv(s, pts);
  return s.str();
}

void report_warnings(const std::vector<std::string>& warnings, std::ostream& err) {
  for (const auto& w : warnings) err << "warning: " << w << "\n";
}

int cmd_bounds(const Options& o, std::ostream& out, std::ostream& err) {
  const LaurentSymbol b = read_symbol(o.symbol);
  std::vector<std::string> warnings;
  const RhoInterval iv = rho_bounds(b, &warnings);
  report_warnings(warnings, err);
  Outputs(o, out).primary("bounds.json", dump(interval_json(iv)));
  return 0;
}

int cmd_subset(const Options& o, std::ostream& out, std::ostream& err) {
  const LaurentSymbol b = read_symbol(o.symbol);
  Outputs outputs(o, out);
  const SubsetPoints sub = subset(b, o.phi_count, o.tol, o.cfg.threads);
  if (sub.failed > 0) err << "warning: " << sub.failed << " candidates skipped (root solve failed)\n";
  err << "subset: " << sub.points.size() << " of " << sub.candidates << " candidates certified\n";
  outputs.primary("subset.csv", points_csv(sub.points));
  if (o.svg) outputs.extra("subset.svg", render_svg({nullptr, nullptr, to_points(sub.points)}));
  return 0;
}

int cmd_region(const Options& o, bool superset, std::ostream& out, std::ostream& err) {
  const LaurentSymbol b = read_symbol(o.symbol);
  Outputs outputs(o, out);
  const LimitSetResult res = compute_sweep(b, o.cfg);
  report_warnings(res.diagnostics.warnings, err);
  err << "elapsed: " << res.diagnostics.wall_seconds << " s\n";
  const Region& main = superset ? res.superset : res.polygon;
  const std::string stem = superset ? "superset" : "polygon";
  outputs.primary(stem + ".json", dump(region_json(main)));
  outputs.extra("diagnostics.json", dump(diagnostics_json(res.diagnostics, true)));
  if (o.svg) {
    SvgScene scene;
    scene.polygon = &res.polygon;
    if (superset) scene.superset = &res.superset;
    outputs.extra(stem + ".svg", render_svg(scene));
  }
  return 0;
}

int cmd_certify(const Options& o, std::ostream& out, std::ostream& err) {
  if (o.phi_count < 1) throw ParameterError("--phi-count must be >= 1");
  const LaurentSymbol b = read_symbol(o.symbol);
  Outputs outputs(o, out);
  const auto start = std::chrono::steady_clock::now();
  const LimitSetResult res = compute_sweep(b, o.cfg);
  report_warnings(res.diagnostics.warnings, err);
  const SubsetPoints sub = subset(b, o.phi_count, o.tol, o.cfg.threads);
  const Certificate cert = error_certificate(res, sub, o.cfg, o.phi_count);
  if (!cert.bound.subset_contained) err << "warning: subset not contained in superset\n";
  err << "elapsed: " << std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count()
      << " s\n";
  outputs.primary("certificate.json", dump(certificate_json(cert)));
  outputs.extra("polygon.json", dump(region_json(res.polygon)));
  outputs.extra("superset.json", dump(region_json(res.superset)));
  outputs.extra("subset.csv", points_csv(sub.points));
  outputs.extra("diagnostics.json", dump(diagnostics_json(res.diagnostics, true)));
  if (o.svg) outputs.extra("certify.svg", render_svg({&res.superset, &res.polygon, to_points(sub.points)}));
  return 0;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Inner and outer approximations of limit sets of banded Toeplitz matrices"};
  app.require_subcommand(1);
  Options o;
  app.add_option("--threads", o.cfg.threads, "worker threads (0: all cores)")->check(CLI::NonNegativeNumber);

  auto* bounds = app.add_subcommand("bounds", "print the compact rho interval");
  add_common(bounds, o);
  add_output(bounds, o);

  auto* sub = app.add_subcommand("subset", "certified subset points as CSV");
  add_common(sub, o);
  add_subset(sub, o);
  add_output(sub, o);

  auto* poly = app.add_subcommand("polygon", "approximating polygon as region JSON");
  auto* sup = app.add_subcommand("superset", "approximating superset as region JSON");
  auto* cert = app.add_subcommand("certify", "Hausdorff error certificate JSON");
  for (auto* cmd : {poly, sup, cert}) {
    add_common(cmd, o);
    add_sampler(cmd, o);
    add_output(cmd, o);
    cmd->add_option("--threads", o.cfg.threads, "worker threads (0: all cores)")->check(CLI::NonNegativeNumber);
  }
  add_subset(cert, o);
  for (auto* cmd : {bounds, sub}) {
    cmd->add_option("--threads", o.cfg.threads, "worker threads (0: all cores)")->check(CLI::NonNegativeNumber);
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? 0 : 1;
  }

  try {
    if (*bounds) return cmd_bounds(o, out, err);
    if (*sub) return cmd_subset(o, out, err);
    if (*poly) return cmd_region(o, false, out, err);
    if (*sup) return cmd_region(o, true, out, err);
    if (*cert) return cmd_certify(o, out, err);
  } catch (const ConvergenceError& e) {
    err << "numerical failure: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
  return 1;
}

}  // namespace toeplitz
