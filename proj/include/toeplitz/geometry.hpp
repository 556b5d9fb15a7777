#pragma once

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

namespace toeplitz {

struct Point {
  double x = 0.0;
  double y = 0.0;
  friend bool operator==(const Point&, const Point&) = default;
};

using Ring = std::vector<Point>;

struct FixedPoint {
  std::int64_t x = 0;
  std::int64_t y = 0;
  friend bool operator==(const FixedPoint&, const FixedPoint&) = default;
};

using FixedRing = std::vector<FixedPoint>;

/// Axis-aligned box; default-constructed boxes are empty.
struct Box {
  double xmin = 0.0, ymin = 0.0, xmax = -1.0, ymax = -1.0;

  bool empty() const noexcept { return xmax < xmin || ymax < ymin; }
  void extend(Point p);
  void extend(const Box& other);
  double diagonal() const;
};

/// Maps user coordinates to signed integer units: fixed = round((p - origin) * scale).
class FixedPointFrame {
 public:
  static constexpr double kDefaultScale = 1e10;
  /// Largest coordinate magnitude any frame admits.
  static constexpr double kMaxMagnitude = 4503599627370496.0;  // 2^52

  explicit FixedPointFrame(double scale = kDefaultScale, Point origin = {});

  /// Largest scale <= preferred_scale that keeps `working` (plus `margin` on every side)
  /// inside the admissible integer range. Origin stays at zero.
  static FixedPointFrame fit(const Box& working, double margin = 0.0,
                             double preferred_scale = kDefaultScale);

  double scale() const noexcept { return scale_; }
  Point origin() const noexcept { return origin_; }

  /// Throws FrameError if the point falls outside the admissible range.
  FixedPoint to_fixed(Point p) const;
  Point to_user(FixedPoint p) const;

  friend bool operator==(const FixedPointFrame&, const FixedPointFrame&) = default;

 private:
  double scale_;
  Point origin_;
};

/// A planar set given by closed integer rings under the nonzero fill rule.
///
/// Ring orientation carries the winding sign (counter-clockwise positive). Rings are kept
/// free of consecutive duplicates and have at least three vertices. Results of boolean
/// operations are normalized: non-self-intersecting outer rings (CCW) and holes (CW).
class Region {
 public:
  Region() = default;
  explicit Region(FixedPointFrame frame) : frame_(frame) {}
  Region(FixedPointFrame frame, std::vector<FixedRing> rings, bool normalized = false);

  /// Rounds user-coordinate rings into `frame`.
  static Region from_rings(const std::vector<Ring>& rings, const FixedPointFrame& frame = FixedPointFrame{});

  const FixedPointFrame& frame() const noexcept { return frame_; }
  const std::vector<FixedRing>& rings() const noexcept { return rings_; }
  std::vector<Ring> user_rings() const;

  bool empty() const noexcept { return rings_.empty(); }
  bool is_normalized() const noexcept { return normalized_; }
  std::size_t vertex_count() const noexcept;
  Box bounding_box() const;

 private:
  FixedPointFrame frame_;
  std::vector<FixedRing> rings_;
  bool normalized_ = true;  // the empty region is trivially normalized
};

/// Signed winding count of a closed ring around `p` (edge-crossing accumulation).
/// Throws DegenerateInputError for rings with fewer than three vertices.
int winding_number(std::span<const Point> ring, Point p);

/// Sum of ring windings of `region` around `p`, evaluated exactly in the fixed frame.
int winding_number(const Region& region, Point p);

/// Nonzero-fill membership.
bool contains(const Region& region, Point p);

/// Self-union under the nonzero rule.
Region normalized(const Region& region);

Region intersect(const Region& a, const Region& b);
Region unite(const Region& a, const Region& b);
Region symmetric_difference(const Region& a, const Region& b);

/// Polygon P with (a)_delta ⊆ P ⊆ (a)_cap, built as the Minkowski sum of `a` with a
/// circumscribed regular polygon. Requires 0 < delta < cap.
Region offset_outward(const Region& a, double delta, double cap);

/// Lebesgue measure of the nonzero-winding set.
double area(const Region& a);

/// Union of regular `sides`-gons inscribed in the radius-`radius` disks around `pts`, so
/// (pts)_{radius cos(pi/sides)} ⊆ result ⊆ (pts)_radius up to one fixed-point unit.
/// Empty when the polygon would fall below the frame resolution.
Region fatten_points(std::span<const Point> pts, double radius, int sides,
                     const FixedPointFrame& frame = FixedPointFrame{});

/// Union of convex hulls of inscribed `sides`-gons at both ends of each segment;
/// lies inside the radius-`radius` fattening of the segments and contains the
/// radius-`radius cos(pi/sides)` fattening up to one fixed-point unit.
Region fatten_segments(std::span<const std::pair<Point, Point>> segments, double radius, int sides,
                       const FixedPointFrame& frame = FixedPointFrame{});

/// True iff area(b) - area(a ∩ b) <= tol_area.
bool covers(const Region& a, const Region& b, double tol_area);

}  // namespace toeplitz
