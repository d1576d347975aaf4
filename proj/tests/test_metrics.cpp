#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>

#include "isol1/errors.hpp"
#include "isol1/geometry.hpp"
#include "isol1/metrics.hpp"

using namespace isol1;

#define CHECK_ERROR_CODE(expr, expected)                        \
  do {                                                          \
    try {                                                       \
      (void)(expr);                                             \
      FAIL_CHECK("expected an error, none thrown");             \
    } catch (const isol1::Error& e) {                           \
      CHECK(e.code() == isol1::ErrorCode::expected);            \
    }                                                           \
  } while (0)

namespace {

Polygon unit_square() {
  return validate_polygon({{0, 0}, {1, 0}, {1, 1}, {0, 1}});
}

Polygon rect_08x12() {
  return validate_polygon({{0, 0}, {0.8, 0}, {0.8, 1.2}, {0, 1.2}});
}

Polygon corner_deleted_01() {
  return validate_polygon(
      {{0, 0}, {1, 0}, {1, 1}, {0.2, 1}, {0.2, 0.8}, {0, 0.8}});
}

}  // namespace

TEST_CASE("point-to-square distance") {
  const Square s{0, 0, 1};
  CHECK(dist_linf_point_to_square({0, 0}, s) == 0.0);
  CHECK(dist_linf_point_to_square({0.7, -0.9}, s) == 0.0);
  CHECK(dist_linf_point_to_square({1, 1}, s) == 0.0);  // corner on boundary
  CHECK(dist_linf_point_to_square({2, 0}, s) == doctest::Approx(1.0));
  // Chebyshev, not taxicab: the diagonal costs the max, not the sum.
  CHECK(dist_linf_point_to_square({2, 2}, s) == doctest::Approx(1.0));
  CHECK(dist_linf_point_to_square({-3, 0.5}, s) == doctest::Approx(2.0));
}

TEST_CASE("point-to-segment distance is the exact piecewise-linear minimum") {
  CHECK(dist_linf_point_to_segment({0.5, 1}, {0, 0}, {1, 0}) ==
        doctest::Approx(1.0));
  CHECK(dist_linf_point_to_segment({1, 0}, {0, 0}, {1, 1}) ==
        doctest::Approx(0.5));
  CHECK(dist_linf_point_to_segment({2, 0}, {0, 0}, {1, 0}) ==
        doctest::Approx(1.0));
  CHECK(dist_linf_point_to_segment({0.3, 0}, {0, 0}, {1, 0}) == 0.0);

  // Cross-check against dense parameter sampling on skewed segments.
  const Point a{0.2, -0.7}, b{1.9, 0.4};
  for (const Point p : {Point{0, 0}, Point{1, 1}, Point{2, -1},
                        Point{0.5, -0.2}, Point{-1, 0.3}}) {
    double best = 1e300;
    for (int i = 0; i <= 20000; ++i) {
      const double t = i / 20000.0;
      const double x = a.x + t * (b.x - a.x);
      const double y = a.y + t * (b.y - a.y);
      best = std::min(best,
                      std::max(std::abs(p.x - x), std::abs(p.y - y)));
    }
    const double exact = dist_linf_point_to_segment(p, a, b);
    CHECK(exact <= best + 1e-12);
    CHECK(exact >= best - 1e-4);  // sampling overshoots by O(step)
  }
}

TEST_CASE("point-to-polygon distance") {
  const Polygon p = unit_square();
  CHECK(dist_linf_point_to_polygon({0.5, 0.5}, p) == 0.0);
  CHECK(dist_linf_point_to_polygon({1, 1}, p) == 0.0);
  CHECK(dist_linf_point_to_polygon({1.5, 0.5}, p) == doctest::Approx(0.5));
  CHECK(dist_linf_point_to_polygon({1.3, 1.4}, p) == doctest::Approx(0.4));
  // Inside the notch of the corner-deleted square: distance to the notch
  // walls, not zero.
  const Polygon c = corner_deleted_01();
  CHECK(dist_linf_point_to_polygon({0.05, 0.95}, c) == doctest::Approx(0.15));
  CHECK(dist_linf_point_to_polygon({0, 1}, c) == doctest::Approx(0.2));
}

TEST_CASE("square containment test") {
  const Polygon c = corner_deleted_01();
  CHECK(square_inside_polygon({0.5, 0.4, 0.35}, c));
  CHECK(square_inside_polygon({0.5, 0.5, 0.5}, unit_square()));
  CHECK(!square_inside_polygon({0.5, 0.5, 0.5}, c));   // covers the notch
  CHECK(!square_inside_polygon({0.1, 0.9, 0.05}, c));  // inside the notch
  CHECK(!square_inside_polygon({2, 2, 0.1}, c));       // outside entirely
}

TEST_CASE("hausdorff distance of a square with itself is exactly zero") {
  const CertifiedValue v =
      hausdorff_linf(unit_square(), {0.5, 0.5, 0.5}, 1e-6);
  CHECK(v.value == 0.0);
  CHECK(v.upper_gap == 0.0);
}

TEST_CASE("hausdorff distance to the equal-perimeter square of a rectangle") {
  // 0.8 x 1.2 rectangle against the concentric half-side-0.5 square.
  const CertifiedValue v =
      hausdorff_linf(rect_08x12(), {0.4, 0.6, 0.5}, 1e-6);
  CHECK(v.upper_gap <= 1e-6);
  CHECK(std::abs(v.value - 0.1) <= v.upper_gap + 1e-12);
}

TEST_CASE("hausdorff distance detects pure translation") {
  const CertifiedValue v =
      hausdorff_linf(unit_square(), {0.8, 0.5, 0.5}, 1e-6);
  CHECK(v.upper_gap <= 1e-6);
  CHECK(std::abs(v.value - 0.3) <= v.upper_gap + 1e-12);
}

TEST_CASE("hausdorff supremum inside a notch is certified") {
  // Square covers the polygon; the farthest square point sits at the deleted
  // corner (0,1), at distance 0.2 from the region.
  const CertifiedValue v =
      hausdorff_linf(corner_deleted_01(), {0.5, 0.5, 0.5}, 1e-6);
  CHECK(v.upper_gap <= 1e-6);
  CHECK(std::abs(v.value - 0.2) <= v.upper_gap + 1e-12);
}

TEST_CASE("halving the resolution keeps certified intervals consistent") {
  const Polygon c = corner_deleted_01();
  const Square s{0.55, 0.45, 0.45};
  double prev_lo = -1e300, prev_hi = 1e300;
  for (double res : {1e-3, 5e-4, 2.5e-4, 1e-5}) {
    const CertifiedValue v = hausdorff_linf(c, s, res);
    CHECK(v.upper_gap <= res);
    // Successive enclosures must overlap: they bracket the same number.
    CHECK(v.lower() <= prev_hi + 1e-15);
    CHECK(v.upper() >= prev_lo - 1e-15);
    prev_lo = v.lower();
    prev_hi = v.upper();
  }
}

TEST_CASE("translating the square moves the distance by at most the shift") {
  const Polygon c = corner_deleted_01();
  const Square s{0.5, 0.5, 0.45};
  const double t = 0.07;
  const CertifiedValue v0 = hausdorff_linf(c, s, 1e-6);
  const CertifiedValue v1 = hausdorff_linf(c, {s.cx + t, s.cy, s.r}, 1e-6);
  CHECK(std::abs(v1.value - v0.value) <=
        t + v0.upper_gap + v1.upper_gap + 1e-12);
}

TEST_CASE("hausdorff rejects non-positive resolution") {
  CHECK_ERROR_CODE(hausdorff_linf(unit_square(), {0.5, 0.5, 0.5}, 0.0),
                   NonPositiveResolution);
  CHECK_ERROR_CODE(hausdorff_linf(unit_square(), {0.5, 0.5, 0.5}, -1e-6),
                   NonPositiveResolution);
}

TEST_CASE("default resolution scales with the square root of the area") {
  CHECK(default_hausdorff_resolution(unit_square()) ==
        doctest::Approx(1e-6).epsilon(1e-9));
  const Polygon big = validate_polygon({{0, 0}, {100, 0}, {100, 100}, {0, 100}});
  CHECK(default_hausdorff_resolution(big) ==
        doctest::Approx(1e-4).epsilon(1e-9));
}
