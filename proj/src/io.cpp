#include "toeplitz/io.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <iomanip>
#include <sstream>

#include "toeplitz/errors.hpp"

namespace toeplitz {

using nlohmann::json;

namespace {

double number_field(const json& obj, const char* key, bool required) {
  const auto it = obj.find(key);
  if (it == obj.end()) {
    if (required) throw FormatError(std::string("missing field \"") + key + "\"");
    return 0.0;
  }
  if (!it->is_number()) throw FormatError(std::string("field \"") + key + "\" must be a number");
  return it->get<double>();
}

Point parse_point(const json& j) {
  if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number()) {
    throw FormatError("a point must be an array [x, y]");
  }
  return {j[0].get<double>(), j[1].get<double>()};
}

const char* sampling_name(RhoSampling s) { return s == RhoSampling::uniform ? "uniform" : "inverse"; }
const char* cbound_name(CurvatureBound c) { return c == CurvatureBound::rigorous ? "rigorous" : "sampled"; }

}  // namespace

LaurentSymbol parse_symbol(const json& j) {
  if (!j.is_object() || !j.contains("terms") || !j["terms"].is_array()) {
    throw FormatError("symbol JSON needs a \"terms\" array");
  }
  std::map<int, Complex> terms;
  for (const auto& t : j["terms"]) {
    if (!t.is_object()) throw FormatError("each term must be an object");
    const auto n = t.find("n");
    if (n == t.end() || !n->is_number_integer()) throw FormatError("term exponent \"n\" must be an integer");
    const int exp = n->get<int>();
    const Complex c{number_field(t, "re", false), number_field(t, "im", false)};
    if (!t.contains("re") && !t.contains("im")) throw FormatError("term needs \"re\" or \"im\"");
    if (!terms.emplace(exp, c).second) throw FormatError("duplicate exponent " + std::to_string(exp));
  }
  return LaurentSymbol(std::move(terms));
}

LaurentSymbol read_symbol(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw FormatError("cannot open symbol file " + path.string());
  json j;
  try {
    j = json::parse(in);
  } catch (const json::parse_error& e) {
    throw FormatError("malformed symbol JSON in " + path.string() + ": " + e.what());
  }
  return parse_symbol(j);
}

json symbol_json(const LaurentSymbol& b) {
  json terms = json::array();
  for (const auto& [n, c] : b.terms()) terms.push_back({{"n", n}, {"re", c.real()}, {"im", c.imag()}});
  return {{"terms", terms}};
}

json region_json(const Region& region) {
  json rings = json::array();
  for (const auto& ring : region.user_rings()) {
    json r = json::array();
    for (const auto& p : ring) r.push_back({p.x, p.y});
    rings.push_back(std::move(r));
  }
  const auto& f = region.frame();
  return {{"rings", rings}, {"frame", {{"scale", f.scale()}, {"origin", {f.origin().x, f.origin().y}}}}};
}

Region parse_region(const json& j) {
  if (!j.is_object() || !j.contains("rings") || !j["rings"].is_array()) {
    throw FormatError("region JSON needs a \"rings\" array");
  }
  FixedPointFrame frame;
  if (const auto f = j.find("frame"); f != j.end()) {
    if (!f->is_object()) throw FormatError("\"frame\" must be an object");
    const Point origin = f->contains("origin") ? parse_point((*f)["origin"]) : Point{};
    frame = FixedPointFrame(number_field(*f, "scale", true), origin);
  }
  std::vector<Ring> rings;
  for (const auto& r : j["rings"]) {
    if (!r.is_array()) throw FormatError("each ring must be an array of points");
    Ring ring;
    for (const auto& p : r) ring.push_back(parse_point(p));
    rings.push_back(std::move(ring));
  }
  return Region::from_rings(rings, frame);
}

void write_points_csv(std::ostream& out, std::span<const Complex> pts) {
  const auto old = out.precision(17);
  for (const auto& p : pts) out << p.real() << ',' << p.imag() << '\n';
  out.precision(old);
}

std::vector<Complex> read_points_csv(std::istream& in) {
  std::vector<Complex> pts;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    const auto comma = line.find(',');
    if (comma == std::string::npos) throw FormatError("CSV row without comma: " + line);
    try {
      pts.emplace_back(std::stod(line.substr(0, comma)), std::stod(line.substr(comma + 1)));
    } catch (const std::logic_error&) {
      throw FormatError("CSV row is not numeric: " + line);
    }
  }
  return pts;
}

std::string render_svg(const SvgScene& scene) {
  Box box;
  if (scene.superset) box.extend(scene.superset->bounding_box());
  if (scene.polygon) box.extend(scene.polygon->bounding_box());
  for (const auto& p : scene.points) box.extend(p);
  if (box.empty()) box.extend(Point{});
  double w = box.xmax - box.xmin;
  double h = box.ymax - box.ymin;
  const double pad = 0.05 * std::max({w, h, 1e-9});
  const double x0 = box.xmin - pad;
  const double y0 = -(box.ymax + pad);
  w += 2 * pad;
  h += 2 * pad;
  const double stroke = 0.002 * std::max(w, h);

  std::ostringstream s;
  s.precision(10);
  s << "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"" << x0 << ' ' << y0 << ' ' << w << ' ' << h
    << "\" width=\"800\" height=\"" << std::lround(800.0 * h / w) << "\">\n";
  s << "<rect x=\"" << x0 << "\" y=\"" << y0 << "\" width=\"" << w << "\" height=\"" << h
    << "\" fill=\"white\"/>\n";
  s << "<g transform=\"scale(1,-1)\">\n";

  auto ring_path = [&](const Ring& ring) {
    std::ostringstream d;
    d.precision(10);
    for (std::size_t i = 0; i < ring.size(); ++i) d << (i == 0 ? "M" : " L") << ring[i].x << ' ' << ring[i].y;
    d << " Z";
    return d.str();
  };
  auto signed_area = [](const Ring& ring) {
    double a = 0.0;
    for (std::size_t i = 0; i < ring.size(); ++i) {
      const Point& p = ring[i];
      const Point& q = ring[(i + 1) % ring.size()];
      a += p.x * q.y - q.x * p.y;
    }
    return 0.5 * a;
  };

  if (scene.superset) {
    // Larger rings first so every hole is painted after the ring enclosing it.
    auto rings = normalized(*scene.superset).user_rings();
    std::stable_sort(rings.begin(), rings.end(), [&](const Ring& a, const Ring& b) {
      return std::abs(signed_area(a)) > std::abs(signed_area(b));
    });
    for (const auto& ring : rings) {
      const bool hole = signed_area(ring) < 0.0;
      s << "<path class=\"superset\" fill-rule=\"nonzero\" fill=\"" << (hole ? "white" : "#9ecae1")
        << "\" stroke=\"none\" d=\"" << ring_path(ring) << "\"/>\n";
    }
  }
  if (scene.polygon) {
    for (const auto& ring : scene.polygon->user_rings()) {
      s << "<path class=\"polygon\" fill-rule=\"nonzero\" fill=\"none\" stroke=\"#08306b\" stroke-width=\""
        << stroke << "\" d=\"" << ring_path(ring) << "\"/>\n";
    }
  }
  for (const auto& p : scene.points) {
    s << "<circle class=\"subset\" cx=\"" << p.x << "\" cy=\"" << p.y << "\" r=\"" << 1.5 * stroke
      << "\" fill=\"#31a354\"/>\n";
  }
  s << "</g>\n</svg>\n";
  return s.str();
}

json interval_json(const RhoInterval& iv) { return {{"rho_l", iv.rho_l}, {"rho_h", iv.rho_h}}; }

json config_json(const SweepConfig& cfg) {
  return {{"n", cfg.n},
          {"m", cfg.m},
          {"l", cfg.l},
          {"sweeps", cfg.sweeps},
          {"seed", cfg.seed},
          {"threshold_divisor", cfg.threshold_divisor},
          {"ma_window", cfg.ma_window},
          {"rho_sampling", sampling_name(cfg.rho_sampling)},
          {"cbound", cbound_name(cfg.cbound)}};
}

json diagnostics_json(const Diagnostics& d, bool include_timing) {
  json intervals = json::array();
  for (const auto& round : d.intervals) {
    json r = json::array();
    for (const auto& [a, b] : round) r.push_back({a, b});
    intervals.push_back(std::move(r));
  }
  json out = {{"interval", interval_json(d.interval)},
              {"seed", d.seed},
              {"vertex_counts", d.vertex_counts},
              {"polygon_areas", d.polygon_areas},
              {"superset_areas", d.superset_areas},
              {"rhos", d.rhos},
              {"intervals", intervals},
              {"sweep_evaluations", d.sweep_evaluations},
              {"warnings", d.warnings}};
  if (include_timing) out["wall_seconds"] = d.wall_seconds;
  return out;
}

json certificate_json(const Certificate& c) {
  json params = config_json(c.cfg);
  params["phi_count"] = c.phi_count;
  params["tol"] = c.tol;
  params["rel_tol"] = c.rel_tol;
  return {{"r_star", c.bound.r_star},
          {"lower", c.bound.lower},
          {"sides", c.bound.sides},
          {"sub_size", c.sub_size},
          {"subset_contained", c.bound.subset_contained},
          {"guarantee",
           c.bound.subset_contained
               ? "Hausdorff distance from both the subset and the superset to the limit set is at most r_star"
               : "subset not contained in superset; r_star bounds the directed distance superset -> subset only"},
          {"rho_interval", interval_json(c.interval)},
          {"superset_area", c.superset_area},
          {"params", params}};
}

void write_text(const std::filesystem::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  out << text;
  out.flush();
  if (!out) throw std::runtime_error("failed writing " + path.string());
}

}  // namespace toeplitz
