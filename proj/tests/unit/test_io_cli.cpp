#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <numbers>
#include <regex>
#include <sstream>
#include <string>
#include <vector>

#include "toeplitz/cli.hpp"
#include "toeplitz/errors.hpp"
#include "toeplitz/io.hpp"

using namespace toeplitz;
namespace fs = std::filesystem;
using nlohmann::json;

namespace {

struct Invocation {
  int code;
  std::string out;
  std::string err;
};

Invocation invoke(std::vector<std::string> args) {
  args.insert(args.begin(), "limitset");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

fs::path scratch(const std::string& name) {
  const fs::path p = fs::temp_directory_path() / ("toeplitz_unit_" + name);
  fs::remove_all(p);
  fs::create_directories(p);
  return p;
}

fs::path write_file(const fs::path& dir, const std::string& name, const std::string& text) {
  const fs::path p = dir / name;
  std::ofstream(p) << text;
  return p;
}

const char* kStar = R"({"terms": [{"n": -4, "re": 1.0, "im": 0.0}, {"n": 1, "re": 1.0, "im": 0.0}]})";

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

std::size_t count(const std::string& text, const std::string& needle) {
  std::size_t n = 0;
  for (auto pos = text.find(needle); pos != std::string::npos; pos = text.find(needle, pos + 1)) ++n;
  return n;
}

}  // namespace

TEST_CASE("symbol JSON parsing") {
  const LaurentSymbol b = parse_symbol(json::parse(kStar));
  CHECK(b.r() == 4);
  CHECK(b.s() == 1);
  CHECK(parse_symbol(symbol_json(b)) == b);
  const LaurentSymbol c = parse_symbol(json::parse(R"({"terms": [{"n": -1, "im": 2.0}, {"n": 1, "re": 1}]})"));
  CHECK(c.coefficient(-1) == Complex(0, 2));

  CHECK_THROWS_AS(parse_symbol(json::parse(R"({"coeffs": []})")), FormatError);
  CHECK_THROWS_AS(parse_symbol(json::parse(R"({"terms": [{"n": 1.5, "re": 1}]})")), FormatError);
  CHECK_THROWS_AS(parse_symbol(json::parse(R"({"terms": [{"n": -1, "re": "x"}, {"n": 1, "re": 1}]})")), FormatError);
  CHECK_THROWS_AS(parse_symbol(json::parse(R"({"terms": [{"n": -1, "re": 1}, {"n": -1, "re": 2}, {"n": 1, "re": 1}]})")),
                  FormatError);
  CHECK_THROWS_AS(parse_symbol(json::parse(R"({"terms": [{"n": 1, "re": 1}]})")), DomainError);
  const fs::path dir = scratch("symbol");
  CHECK_THROWS_AS(read_symbol(write_file(dir, "bad.json", "{not json")), FormatError);
  CHECK_THROWS_AS(read_symbol(dir / "missing.json"), FormatError);
}

TEST_CASE("region JSON round trip is exact") {
  const FixedPointFrame frame(1e7, {0.25, -0.5});
  const Region r = Region::from_rings({{{0, 0}, {1.123456789, 0.1}, {0.3, 0.987654321}}}, frame);
  const Region back = parse_region(json::parse(region_json(r).dump()));
  CHECK(back.frame() == r.frame());
  CHECK(back.rings() == r.rings());
  CHECK(area(back) == area(r));

  const Region defaults = parse_region(json::parse(R"({"rings": [[[0, 0], [1, 0], [0, 1]]]})"));
  CHECK(defaults.frame() == FixedPointFrame{});
  CHECK(area(defaults) == doctest::Approx(0.5));
  CHECK_THROWS_AS(parse_region(json::parse(R"({"rings": [[[0, 0], [1]]]})")), FormatError);
  CHECK_THROWS_AS(parse_region(json::parse(R"({"shapes": []})")), FormatError);
}

TEST_CASE("points CSV round trip") {
  const std::vector<Complex> pts{{0.1, -0.2}, {1.0 / 3, std::numbers::pi}};
  std::stringstream s;
  write_points_csv(s, pts);
  CHECK(read_points_csv(s) == pts);
  std::stringstream bad("1.0;2.0\n");
  CHECK_THROWS_AS(read_points_csv(bad), FormatError);
}

TEST_CASE("SVG has one nonzero path per ring and a flipped y axis") {
  const Region sup = Region::from_rings({{{0, 0}, {4, 0}, {4, 4}, {0, 4}}, {{1, 1}, {1, 2}, {2, 2}, {2, 1}}});
  const Region poly = Region::from_rings({{{0.5, 0.5}, {3, 0.5}, {3, 3}}});
  SvgScene scene;
  scene.superset = &sup;
  scene.polygon = &poly;
  scene.points = {{1, 1}, {2, 2}, {3, 3}};
  const std::string svg = render_svg(scene);
  CHECK(count(svg, "<path") == sup.rings().size() + poly.rings().size());
  CHECK(count(svg, "fill-rule=\"nonzero\"") == count(svg, "<path"));
  CHECK(count(svg, "<circle") == 3);
  CHECK(svg.find("scale(1,-1)") != std::string::npos);
  std::smatch m;
  REQUIRE(std::regex_search(svg, m, std::regex("viewBox=\"([-0-9.e]+) ([-0-9.e]+) ([-0-9.e]+) ([-0-9.e]+)\"")));
  CHECK(std::stod(m[3]) == doctest::Approx(4.4));
  CHECK(std::stod(m[4]) == doctest::Approx(4.4));
}

TEST_CASE("CLI bounds and exit codes") {
  const fs::path dir = scratch("cli");
  const fs::path star = write_file(dir, "star.json", kStar);

  const Invocation ok = invoke({"bounds", "--symbol", star.string()});
  CHECK(ok.code == 0);
  const json iv = json::parse(ok.out);
  CHECK(iv["rho_l"].get<double>() == doctest::Approx(0.7748041).epsilon(1e-6));
  CHECK(iv["rho_h"].get<double>() == doctest::Approx(2.0559674).epsilon(1e-6));

  CHECK(invoke({"bounds", "--symbol", (dir / "nope.json").string()}).code == 1);
  CHECK(invoke({"bounds", "--symbol", star.string(), "--bogus"}).code == 1);
  CHECK(invoke({}).code == 1);
  const Invocation bad = invoke({"bounds", "--symbol", write_file(dir, "bad.json", "{").string()});
  CHECK(bad.code == 1);
  CHECK(!bad.err.empty());
  CHECK(invoke({"polygon", "--symbol", star.string(), "--rho-sampling", "random"}).code == 1);
  CHECK(invoke({"polygon", "--symbol", star.string(), "--n", "1", "--m", "4", "--svg"}).code == 1);
  const fs::path blocker = write_file(dir, "blocker", "");
  CHECK(invoke({"bounds", "--symbol", star.string(), "--out", (blocker / "x").string()}).code == 1);
  CHECK(invoke({"--help"}).code == 0);
}

TEST_CASE("CLI polygon with one spectrum is a quadrilateral") {
  const fs::path dir = scratch("poly");
  const fs::path star = write_file(dir, "star.json", kStar);
  const Invocation r = invoke({"polygon", "--symbol", star.string(), "--n", "1", "--m", "4"});
  REQUIRE(r.code == 0);
  const Region poly = parse_region(json::parse(r.out));
  REQUIRE(poly.rings().size() == 1);
  CHECK(poly.rings().front().size() == 4);
}

TEST_CASE("CLI polygon output re-parses with identical area") {
  const fs::path dir = scratch("roundtrip");
  const fs::path star = write_file(dir, "star.json", kStar);
  const fs::path out = dir / "out";
  const Invocation r = invoke({"polygon", "--symbol", star.string(), "--n", "20", "--m", "200", "--sweeps", "2",
                               "--l", "20", "--out", out.string(), "--svg"});
  REQUIRE(r.code == 0);
  CHECK(r.out.empty());
  const json j = json::parse(slurp(out / "polygon.json"));
  const json d = json::parse(slurp(out / "diagnostics.json"));
  const Region poly = parse_region(j);
  CHECK(area(poly) == d["polygon_areas"].back().get<double>());
  const std::string svg = slurp(out / "polygon.svg");
  CHECK(count(svg, "<path") == poly.rings().size());
}

TEST_CASE("CLI subset and certify") {
  const fs::path dir = scratch("certify");
  const fs::path star = write_file(dir, "star.json", kStar);
  const Invocation s = invoke({"subset", "--symbol", star.string(), "--phi-count", "10"});
  REQUIRE(s.code == 0);
  std::istringstream csv(s.out);
  CHECK(!read_points_csv(csv).empty());

  const std::vector<std::string> args{"certify", "--symbol", star.string(), "--n", "30", "--m", "200",
                                      "--l", "20", "--sweeps", "2", "--phi-count", "50", "--seed", "3"};
  const Invocation a = invoke(args);
  const Invocation b = invoke(args);
  REQUIRE(a.code == 0);
  CHECK(a.out == b.out);
  const json c = json::parse(a.out);
  for (const char* key : {"r_star", "lower", "sides", "sub_size", "params"}) CHECK(c.contains(key));
  CHECK(c["sides"] == 20);
  CHECK(c["params"]["seed"] == 3);
  CHECK(invoke({"certify", "--symbol", star.string(), "--phi-count", "0"}).code == 1);
}
