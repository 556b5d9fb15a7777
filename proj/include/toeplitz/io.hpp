#pragma once

#include <filesystem>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include <json.hpp>

#include "toeplitz/geometry.hpp"
#include "toeplitz/hausdorff.hpp"
#include "toeplitz/limitset.hpp"
#include "toeplitz/symbol.hpp"

namespace toeplitz {

/// {"terms": [{"n": int, "re": float, "im": float}, ...]}; exponents must be unique.
/// Throws FormatError on malformed input and DomainError on an invalid symbol.
LaurentSymbol parse_symbol(const nlohmann::json& j);
LaurentSymbol read_symbol(const std::filesystem::path& path);
nlohmann::json symbol_json(const LaurentSymbol& b);

/// {"rings": [[[x, y], ...], ...], "frame": {"scale": s, "origin": [x, y]}}.
/// Coordinates are printed with round-trip precision, so parsing with the stored frame
/// recovers the fixed-point rings exactly.
nlohmann::json region_json(const Region& region);
/// The frame field is optional (default frame when absent).
Region parse_region(const nlohmann::json& j);

/// One "re,im" row per point.
void write_points_csv(std::ostream& out, std::span<const Complex> pts);
std::vector<Complex> read_points_csv(std::istream& in);

struct SvgScene {
  const Region* superset = nullptr;  ///< filled
  const Region* polygon = nullptr;   ///< outlined
  std::vector<Point> points;         ///< dots
};

/// SVG with mathematical y orientation, viewBox = content box plus 5% margin, one path per ring.
std::string render_svg(const SvgScene& scene);

nlohmann::json interval_json(const RhoInterval& iv);
nlohmann::json config_json(const SweepConfig& cfg);
nlohmann::json diagnostics_json(const Diagnostics& d, bool include_timing);
nlohmann::json certificate_json(const Certificate& c);

/// Writes `text` to `path`; throws std::runtime_error when the file cannot be written.
void write_text(const std::filesystem::path& path, const std::string& text);

}  // namespace toeplitz
