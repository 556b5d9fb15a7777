#include "toeplitz/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "clipper.hpp"
#include "toeplitz/errors.hpp"

namespace toeplitz {

namespace cl = ClipperLib;

namespace {

cl::Path to_path(const FixedRing& ring) {
  cl::Path path;
  path.reserve(ring.size());
  for (const auto& p : ring) path.emplace_back(p.x, p.y);
  return path;
}

cl::Paths to_paths(const std::vector<FixedRing>& rings) {
  cl::Paths paths;
  paths.reserve(rings.size());
  for (const auto& r : rings) paths.push_back(to_path(r));
  return paths;
}

// Drops consecutive duplicates (cyclically) and rings left with fewer than three vertices.
void clean_ring(FixedRing& ring) {
  ring.erase(std::unique(ring.begin(), ring.end()), ring.end());
  while (ring.size() > 1 && ring.front() == ring.back()) ring.pop_back();
}

std::vector<FixedRing> from_paths(const cl::Paths& paths) {
  std::vector<FixedRing> rings;
  rings.reserve(paths.size());
  for (const auto& path : paths) {
    FixedRing ring;
    ring.reserve(path.size());
    for (const auto& p : path) ring.push_back({p.X, p.Y});
    clean_ring(ring);
    if (ring.size() >= 3) rings.push_back(std::move(ring));
  }
  return rings;
}

void require_same_frame(const Region& a, const Region& b) {
  if (!(a.frame() == b.frame())) {
    throw FrameError("regions live in different fixed-point frames");
  }
}

Region run_clipper(const Region& a, const Region& b, cl::ClipType op) {
  cl::Clipper clipper;
  clipper.AddPaths(to_paths(a.rings()), cl::ptSubject, true);
  clipper.AddPaths(to_paths(b.rings()), cl::ptClip, true);
  cl::Paths out;
  clipper.Execute(op, out, cl::pftNonZero, cl::pftNonZero);
  return Region(a.frame(), from_paths(out), true);
}

// Balanced merge tree over independently filled shapes; a single sweep over many
// overlapping paths is far slower. Holes must not be passed as separate paths.
cl::Paths union_range(const cl::Paths& paths, std::size_t lo, std::size_t hi) {
  cl::Clipper clipper;
  if (hi - lo <= 16) {
    for (std::size_t i = lo; i < hi; ++i) clipper.AddPath(paths[i], cl::ptSubject, true);
  } else {
    const std::size_t mid = lo + (hi - lo) / 2;
    clipper.AddPaths(union_range(paths, lo, mid), cl::ptSubject, true);
    clipper.AddPaths(union_range(paths, mid, hi), cl::ptClip, true);
  }
  cl::Paths out;
  clipper.Execute(cl::ctUnion, out, cl::pftNonZero, cl::pftNonZero);
  return out;
}

Region union_of(const FixedPointFrame& frame, const cl::Paths& paths) {
  if (paths.empty()) return Region(frame);
  return Region(frame, from_paths(union_range(paths, 0, paths.size())), true);
}

// Twice the signed area of a ring, exact in 128-bit integers.
__int128 twice_area(const FixedRing& ring) {
  __int128 acc = 0;
  const std::int64_t ox = ring.front().x;
  const std::int64_t oy = ring.front().y;
  for (std::size_t i = 1; i + 1 < ring.size(); ++i) {
    const __int128 ax = ring[i].x - ox, ay = ring[i].y - oy;
    const __int128 bx = ring[i + 1].x - ox, by = ring[i + 1].y - oy;
    acc += ax * by - ay * bx;
  }
  return acc;
}

// Regular polygon centred at the origin with vertex distance `radius` (fixed units).
std::vector<FixedPoint> regular_polygon(double radius, int sides) {
  std::vector<FixedPoint> pts;
  pts.reserve(static_cast<std::size_t>(sides));
  for (int j = 0; j < sides; ++j) {
    const double t = 2.0 * std::numbers::pi * j / sides;
    pts.push_back({std::llround(radius * std::cos(t)), std::llround(radius * std::sin(t))});
  }
  return pts;
}

__int128 cross(const FixedPoint& o, const FixedPoint& a, const FixedPoint& b) {
  return static_cast<__int128>(a.x - o.x) * (b.y - o.y) - static_cast<__int128>(a.y - o.y) * (b.x - o.x);
}

// Andrew's monotone chain; counter-clockwise, collinear points removed.
cl::Path convex_hull(std::vector<FixedPoint> pts) {
  std::sort(pts.begin(), pts.end(), [](const FixedPoint& a, const FixedPoint& b) {
    return a.x < b.x || (a.x == b.x && a.y < b.y);
  });
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  if (pts.size() < 3) return {};
  std::vector<FixedPoint> hull(2 * pts.size());
  std::size_t k = 0;
  for (const auto& p : pts) {
    while (k >= 2 && cross(hull[k - 2], hull[k - 1], p) <= 0) --k;
    hull[k++] = p;
  }
  for (std::size_t i = pts.size() - 1, t = k + 1; i-- > 0;) {
    while (k >= t && cross(hull[k - 2], hull[k - 1], pts[i]) <= 0) --k;
    hull[k++] = pts[i];
  }
  hull.resize(k - 1);
  cl::Path path;
  path.reserve(hull.size());
  for (const auto& p : hull) path.emplace_back(p.x, p.y);
  return path;
}

cl::Path capsule(const FixedPoint& a, const FixedPoint& b, const std::vector<FixedPoint>& pattern) {
  std::vector<FixedPoint> pts;
  pts.reserve(2 * pattern.size());
  for (const auto& k : pattern) {
    pts.push_back({a.x + k.x, a.y + k.y});
    pts.push_back({b.x + k.x, b.y + k.y});
  }
  return convex_hull(std::move(pts));
}

}  // namespace

void Box::extend(Point p) {
  if (empty()) {
    xmin = xmax = p.x;
    ymin = ymax = p.y;
    return;
  }
  xmin = std::min(xmin, p.x);
  xmax = std::max(xmax, p.x);
  ymin = std::min(ymin, p.y);
  ymax = std::max(ymax, p.y);
}

void Box::extend(const Box& other) {
  if (other.empty()) return;
  extend(Point{other.xmin, other.ymin});
  extend(Point{other.xmax, other.ymax});
}

double Box::diagonal() const { return empty() ? 0.0 : std::hypot(xmax - xmin, ymax - ymin); }

FixedPointFrame::FixedPointFrame(double scale, Point origin) : scale_(scale), origin_(origin) {
  if (!(scale > 0.0) || !std::isfinite(scale)) throw FrameError("frame scale must be positive");
}

FixedPointFrame FixedPointFrame::fit(const Box& working, double margin, double preferred_scale) {
  if (working.empty()) return FixedPointFrame(preferred_scale);
  const double extent = std::max({std::abs(working.xmin), std::abs(working.xmax),
                                  std::abs(working.ymin), std::abs(working.ymax)}) +
                        std::max(margin, 0.0);
  double scale = preferred_scale;
  // keep a factor 4 of headroom for offsets and fattenings built on top
  if (extent * scale > kMaxMagnitude / 4.0) scale = kMaxMagnitude / 4.0 / extent;
  return FixedPointFrame(scale);
}

FixedPoint FixedPointFrame::to_fixed(Point p) const {
  const double x = std::round((p.x - origin_.x) * scale_);
  const double y = std::round((p.y - origin_.y) * scale_);
  if (!(std::abs(x) <= kMaxMagnitude) || !(std::abs(y) <= kMaxMagnitude)) {
    throw FrameError("coordinate out of fixed-point range");
  }
  return {static_cast<std::int64_t>(x), static_cast<std::int64_t>(y)};
}

Point FixedPointFrame::to_user(FixedPoint p) const {
  return {static_cast<double>(p.x) / scale_ + origin_.x, static_cast<double>(p.y) / scale_ + origin_.y};
}

Region::Region(FixedPointFrame frame, std::vector<FixedRing> rings, bool normalized)
    : frame_(frame), normalized_(normalized) {
  rings_.reserve(rings.size());
  for (auto& ring : rings) {
    clean_ring(ring);
    if (ring.size() >= 3) rings_.push_back(std::move(ring));
  }
  if (rings_.empty()) normalized_ = true;
}

Region Region::from_rings(const std::vector<Ring>& rings, const FixedPointFrame& frame) {
  std::vector<FixedRing> fixed;
  fixed.reserve(rings.size());
  for (const auto& ring : rings) {
    FixedRing fr;
    fr.reserve(ring.size());
    for (const auto& p : ring) fr.push_back(frame.to_fixed(p));
    fixed.push_back(std::move(fr));
  }
  return Region(frame, std::move(fixed), false);
}

std::vector<Ring> Region::user_rings() const {
  std::vector<Ring> out;
  out.reserve(rings_.size());
  for (const auto& ring : rings_) {
    Ring r;
    r.reserve(ring.size());
    for (const auto& p : ring) r.push_back(frame_.to_user(p));
    out.push_back(std::move(r));
  }
  return out;
}

std::size_t Region::vertex_count() const noexcept {
  std::size_t n = 0;
  for (const auto& r : rings_) n += r.size();
  return n;
}

Box Region::bounding_box() const {
  Box box;
  for (const auto& ring : rings_) {
    for (const auto& p : ring) box.extend(frame_.to_user(p));
  }
  return box;
}

int winding_number(std::span<const Point> ring, Point p) {
  if (ring.size() < 3) throw DegenerateInputError("winding number needs a ring with at least 3 vertices");
  int w = 0;
  const std::size_t n = ring.size();
  for (std::size_t i = 0; i < n; ++i) {
    const Point& a = ring[i];
    const Point& b = ring[(i + 1) % n];
    const double side = (b.x - a.x) * (p.y - a.y) - (p.x - a.x) * (b.y - a.y);
    if (a.y <= p.y) {
      if (b.y > p.y && side > 0.0) ++w;
    } else if (b.y <= p.y && side < 0.0) {
      --w;
    }
  }
  return w;
}

int winding_number(const Region& region, Point p) {
  if (region.empty()) return 0;
  const FixedPoint q = region.frame().to_fixed(p);
  int w = 0;
  for (const auto& ring : region.rings()) {
    const std::size_t n = ring.size();
    for (std::size_t i = 0; i < n; ++i) {
      const FixedPoint& a = ring[i];
      const FixedPoint& b = ring[(i + 1) % n];
      const __int128 side = cross(a, b, q);
      if (a.y <= q.y) {
        if (b.y > q.y && side > 0) ++w;
      } else if (b.y <= q.y && side < 0) {
        --w;
      }
    }
  }
  return w;
}

bool contains(const Region& region, Point p) { return winding_number(region, p) != 0; }

Region normalized(const Region& region) {
  if (region.is_normalized()) return region;
  cl::Clipper clipper;
  clipper.AddPaths(to_paths(region.rings()), cl::ptSubject, true);
  cl::Paths out;
  clipper.Execute(cl::ctUnion, out, cl::pftNonZero, cl::pftNonZero);
  return Region(region.frame(), from_paths(out), true);
}

Region intersect(const Region& a, const Region& b) {
  if (a.empty()) return Region(b.frame());
  if (b.empty()) return Region(a.frame());
  require_same_frame(a, b);
  return run_clipper(a, b, cl::ctIntersection);
}

Region unite(const Region& a, const Region& b) {
  if (a.empty()) return normalized(b);
  if (b.empty()) return normalized(a);
  require_same_frame(a, b);
  return run_clipper(a, b, cl::ctUnion);
}

Region symmetric_difference(const Region& a, const Region& b) {
  if (a.empty()) return normalized(b);
  if (b.empty()) return normalized(a);
  require_same_frame(a, b);
  return run_clipper(a, b, cl::ctXor);
}

double area(const Region& a) {
  if (a.empty()) return 0.0;
  const Region n = normalized(a);
  __int128 twice = 0;
  for (const auto& ring : n.rings()) twice += twice_area(ring);
  const double s = n.frame().scale();
  return std::max(0.0, static_cast<double>(twice) / 2.0 / (s * s));
}

Region offset_outward(const Region& a, double delta, double cap) {
  if (!(delta > 0.0)) throw ParameterError("offset delta must be positive");
  if (!(cap > delta)) throw ParameterError("offset cap must exceed delta");
  if (a.empty()) return a;

  const Region base = normalized(a);
  const double scale = base.frame().scale();
  // Inner radius pads two units: one for the input rounding, one for the pattern's.
  const double inner = delta * scale + 2.0;
  const double outer = cap * scale - 1.0;
  if (!(inner < outer)) {
    throw FrameError("offset band is below the fixed-point resolution of the frame");
  }
  int sides = 8;
  while (inner / std::cos(std::numbers::pi / sides) > outer) {
    if (++sides > (1 << 16)) throw ParameterError("offset cap too close to delta");
  }
  const auto pattern = regular_polygon(inner / std::cos(std::numbers::pi / sides), sides);

  cl::Paths paths;
  for (const auto& ring : base.rings()) {
    const std::size_t n = ring.size();
    for (std::size_t i = 0; i < n; ++i) {
      cl::Path hull = capsule(ring[i], ring[(i + 1) % n], pattern);
      if (!hull.empty()) paths.push_back(std::move(hull));
    }
  }
  return unite(base, union_of(base.frame(), paths));
}

Region fatten_points(std::span<const Point> pts, double radius, int sides, const FixedPointFrame& frame) {
  if (pts.empty()) return Region(frame);
  if (!(radius > 0.0)) throw ParameterError("fattening radius must be positive");
  if (sides < 3) throw ParameterError("fattening polygon needs at least 3 sides");
  // 1.5 units absorb the rounding of centres and vertices
  const double vertex_radius = radius * frame.scale() - 1.5;
  if (!(vertex_radius >= 1.0)) return Region(frame);
  const auto pattern = regular_polygon(vertex_radius, sides);
  cl::Paths paths;
  paths.reserve(pts.size());
  for (const auto& p : pts) {
    const FixedPoint c = frame.to_fixed(p);
    cl::Path path;
    path.reserve(pattern.size());
    for (const auto& k : pattern) path.emplace_back(c.x + k.x, c.y + k.y);
    paths.push_back(std::move(path));
  }
  return union_of(frame, paths);
}

Region fatten_segments(std::span<const std::pair<Point, Point>> segments, double radius, int sides,
                       const FixedPointFrame& frame) {
  if (segments.empty()) return Region(frame);
  if (!(radius > 0.0)) throw ParameterError("fattening radius must be positive");
  if (sides < 3) throw ParameterError("fattening polygon needs at least 3 sides");
  const double vertex_radius = radius * frame.scale() - 1.5;
  if (!(vertex_radius >= 1.0)) return Region(frame);
  const auto pattern = regular_polygon(vertex_radius, sides);
  cl::Paths paths;
  paths.reserve(segments.size());
  for (const auto& [p, q] : segments) {
    cl::Path hull = capsule(frame.to_fixed(p), frame.to_fixed(q), pattern);
    if (!hull.empty()) paths.push_back(std::move(hull));
  }
  return union_of(frame, paths);
}

bool covers(const Region& a, const Region& b, double tol_area) {
  if (b.empty()) return true;
  return area(b) - area(intersect(a, b)) <= tol_area;
}

}  // namespace toeplitz
