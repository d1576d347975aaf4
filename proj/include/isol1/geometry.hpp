#pragma once

#include <cstddef>
#include <string>
#include <vector>

namespace isol1 {

// Geometric predicate tolerance, in input units. Used for vertex dedup,
// collinearity merging and the simplicity test.
inline constexpr double kTauGeo = 1e-9;

struct Point {
  double x = 0.0;
  double y = 0.0;
};

/// Axis-aligned rectangle, stored by its extents.
struct Rect {
  double xmin = 0.0;
  double ymin = 0.0;
  double xmax = 0.0;
  double ymax = 0.0;

  double width() const { return xmax - xmin; }
  double height() const { return ymax - ymin; }
  Point center() const { return {0.5 * (xmin + xmax), 0.5 * (ymin + ymax)}; }
};

/// Normalized side parameters of a rectangle: sides are ell - 2*alpha and
/// ell + 2*alpha with alpha >= 0, so ell is the mean half-perimeter side.
struct RectParams {
  double ell = 0.0;
  double alpha = 0.0;
  double width = 0.0;
  double height = 0.0;
};

/// Axis-aligned square given by center and half-side r.
struct Square {
  double cx = 0.0;
  double cy = 0.0;
  double r = 0.0;

  double xmin() const { return cx - r; }
  double xmax() const { return cx + r; }
  double ymin() const { return cy - r; }
  double ymax() const { return cy + r; }
  double side() const { return 2.0 * r; }
};

/// Simple polygon with counterclockwise orientation and no degenerate
/// vertices. Instances are only produced by validate_polygon, which is the
/// sole place the invariants are established.
class Polygon {
 public:
  const std::vector<Point>& vertices() const { return vertices_; }
  const std::string& name() const { return name_; }
  std::size_t size() const { return vertices_.size(); }

  Polygon with_name(std::string name) const;

 private:
  Polygon(std::vector<Point> vertices, std::string name)
      : vertices_(std::move(vertices)), name_(std::move(name)) {}

  std::vector<Point> vertices_;
  std::string name_;

  friend Polygon validate_polygon(const std::vector<Point>& raw, std::string name);
};

/// Validates and normalizes a vertex list into a Polygon:
/// - requires at least 3 raw vertices (TooFewVertices)
/// - requires finite coordinates (NonFiniteCoordinate)
/// - drops consecutive duplicates and merges collinear runs (cross-product
///   magnitude below kTauGeo times the product of edge lengths)
/// - rejects near-zero area (DegenerateArea) and self-intersection,
///   including fold-back spikes and T-joints (SelfIntersecting)
/// - repairs clockwise input by reversing, then rotates so the
///   lexicographically smallest vertex comes first.
/// Validating an already valid polygon returns an identical vertex list.
Polygon validate_polygon(const std::vector<Point>& raw, std::string name = "");

/// Enclosed area (shoelace). Positive for the CCW polygons produced by
/// validate_polygon.
double area(const Polygon& p);

/// Boundary length in the taxicab metric: sum of |dx| + |dy| over edges.
/// Never smaller than the perimeter of the bounding rectangle.
double l1_perimeter(const Polygon& p);

Rect bounding_rect(const Polygon& p);

RectParams rect_params(const Rect& r);

/// Plane transform descriptor. Translations, the two axis reflections and
/// the coordinate swap are the isometries of the taxicab plane; scaling is
/// the similarity used for covariance tests.
struct Transform {
  enum class Kind { Translate, ReflectX, ReflectY, SwapXY, Scale };

  Kind kind = Kind::Translate;
  double a = 0.0;  // dx for Translate, factor for Scale
  double b = 0.0;  // dy for Translate

  static Transform translate(double dx, double dy) { return {Kind::Translate, dx, dy}; }
  static Transform reflect_x() { return {Kind::ReflectX, 0.0, 0.0}; }
  static Transform reflect_y() { return {Kind::ReflectY, 0.0, 0.0}; }
  static Transform swap_xy() { return {Kind::SwapXY, 0.0, 0.0}; }
  static Transform scale(double factor) { return {Kind::Scale, factor, 0.0}; }
};

/// Applies a transform and re-normalizes (orientation-reversing transforms
/// flip the vertex order back to CCW). Scale factors must be positive.
Polygon transform(const Polygon& p, const Transform& t);

/// Area of the intersection of the filled polygon with the filled square,
/// via Sutherland-Hodgman clipping against the four half-planes of the
/// square. Exact up to floating point; result lies in
/// [0, min(area(p), side^2)].
double clip_to_square(const Polygon& p, const Square& s);

/// Even-odd crossing test. Points exactly on the boundary are resolved
/// arbitrarily at floating-point level; distance-based callers first check
/// the edge distance, which is what decides boundary cases.
bool point_in_polygon(const Point& pt, const Polygon& p);

/// True iff the open interior of the axis-aligned box meets the segment ab.
bool segment_meets_open_box(const Point& a, const Point& b, const Rect& box);

}  // namespace isol1
