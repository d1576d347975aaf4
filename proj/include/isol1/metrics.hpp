#pragma once

#include "isol1/geometry.hpp"

namespace isol1 {

/// Value with a certified symmetric error bound: the true quantity lies in
/// [value - upper_gap, value + upper_gap].
struct CertifiedValue {
  double value = 0.0;
  double upper_gap = 0.0;

  double lower() const { return value - upper_gap; }
  double upper() const { return value + upper_gap; }
};

/// Chebyshev (L-infinity) distance from a point to the filled square:
/// max(0, ||p - center||_inf - r).
double dist_linf_point_to_square(const Point& p, const Square& s);

/// Exact L-infinity distance from a point to a segment. The objective
/// max(|px - x(t)|, |py - y(t)|) is piecewise linear and convex in t, so the
/// minimum is attained at an endpoint or a breakpoint; all candidates are
/// enumerated.
double dist_linf_point_to_segment(const Point& p, const Point& a, const Point& b);

/// L-infinity distance from a point to the filled polygon: zero inside or on
/// the boundary, otherwise the minimum over the boundary edges.
double dist_linf_point_to_polygon(const Point& p, const Polygon& poly);

/// Exact containment test: the filled square lies inside the filled polygon
/// iff the square's center is inside and no polygon edge enters the square's
/// open interior.
bool square_inside_polygon(const Square& s, const Polygon& poly);

/// Default certification resolution for hausdorff_linf: 1e-6 * sqrt(area).
double default_hausdorff_resolution(const Polygon& p);

/// Certified L-infinity Hausdorff distance between the filled polygon and
/// the filled square, d(A,S) = inf{lambda >= 0 : A within S fattened by
/// lambda and S within A fattened by lambda} with square (L-infinity ball)
/// fattening.
///
/// The polygon-to-square direction is exact: the distance-to-square function
/// is convex, so its supremum over the filled polygon is attained at a
/// vertex. The square-to-polygon direction is certified by level-synchronous
/// branch and bound over the square: each cell carries the upper bound
/// min over edges of the max corner distance (distance to one segment is
/// convex, so the cell max is at a corner), cells fully inside the polygon
/// are discarded exactly, and refinement stops once the enclosure width is
/// within the requested resolution.
///
/// Postcondition: |true distance - value| <= upper_gap <= resolution.
CertifiedValue hausdorff_linf(const Polygon& a, const Square& s, double resolution);

}  // namespace isol1
