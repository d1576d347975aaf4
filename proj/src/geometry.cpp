#include "isol1/geometry.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>
#include <limits>
#include <utility>

#include "isol1/errors.hpp"

namespace isol1 {

namespace {

double cross3(const Point& a, const Point& b, const Point& c) {
  return (b.x - a.x) * (c.y - a.y) - (b.y - a.y) * (c.x - a.x);
}

double linf(const Point& a, const Point& b) {
  return std::max(std::abs(a.x - b.x), std::abs(a.y - b.y));
}

double edge_len(const Point& a, const Point& b) {
  return std::hypot(b.x - a.x, b.y - a.y);
}

double shoelace(const std::vector<Point>& v) {
  double acc = 0.0;
  const std::size_t n = v.size();
  for (std::size_t i = 0, j = n - 1; i < n; j = i++) {
    acc += v[j].x * v[i].y - v[i].x * v[j].y;
  }
  return 0.5 * acc;
}

// Euclidean distance from p to segment ab; only used for touch tests, so
// precision requirements are mild.
double point_segment_dist(const Point& p, const Point& a, const Point& b) {
  const double dx = b.x - a.x, dy = b.y - a.y;
  const double len2 = dx * dx + dy * dy;
  double t = 0.0;
  if (len2 > 0.0) {
    t = ((p.x - a.x) * dx + (p.y - a.y) * dy) / len2;
    t = std::clamp(t, 0.0, 1.0);
  }
  const double ex = a.x + t * dx - p.x;
  const double ey = a.y + t * dy - p.y;
  return std::hypot(ex, ey);
}

bool segments_intersect_or_touch(const Point& a, const Point& b, const Point& c,
                                 const Point& d, double tau) {
  // Bounding box reject with margin.
  if (std::max(a.x, b.x) + tau < std::min(c.x, d.x)) return false;
  if (std::max(c.x, d.x) + tau < std::min(a.x, b.x)) return false;
  if (std::max(a.y, b.y) + tau < std::min(c.y, d.y)) return false;
  if (std::max(c.y, d.y) + tau < std::min(a.y, b.y)) return false;

  const double d1 = cross3(c, d, a);
  const double d2 = cross3(c, d, b);
  const double d3 = cross3(a, b, c);
  const double d4 = cross3(a, b, d);
  if (((d1 > 0.0 && d2 < 0.0) || (d1 < 0.0 && d2 > 0.0)) &&
      ((d3 > 0.0 && d4 < 0.0) || (d3 < 0.0 && d4 > 0.0))) {
    return true;
  }
  // Endpoint touches and collinear overlaps.
  if (point_segment_dist(a, c, d) <= tau) return true;
  if (point_segment_dist(b, c, d) <= tau) return true;
  if (point_segment_dist(c, a, b) <= tau) return true;
  if (point_segment_dist(d, a, b) <= tau) return true;
  return false;
}

void check_simple(const std::vector<Point>& v) {
  const std::size_t n = v.size();
  for (std::size_t i = 0; i < n; ++i) {
    const Point& a = v[i];
    const Point& b = v[(i + 1) % n];
    for (std::size_t j = i + 1; j < n; ++j) {
      // Skip edge pairs sharing a vertex (adjacent in the cycle).
      if (j == i || (j + 1) % n == i || (i + 1) % n == j) continue;
      const Point& c = v[j];
      const Point& d = v[(j + 1) % n];
      if (segments_intersect_or_touch(a, b, c, d, kTauGeo)) {
        throw Error(ErrorCode::SelfIntersecting,
                    "edges " + std::to_string(i) + " and " + std::to_string(j) + " intersect");
      }
    }
  }
}

}  // namespace

Polygon Polygon::with_name(std::string name) const {
  Polygon copy = *this;
  copy.name_ = std::move(name);
  return copy;
}

Polygon validate_polygon(const std::vector<Point>& raw, std::string name) {
  if (raw.size() < 3) {
    throw Error(ErrorCode::TooFewVertices,
                "need at least 3 vertices, got " + std::to_string(raw.size()));
  }
  for (const Point& p : raw) {
    if (!std::isfinite(p.x) || !std::isfinite(p.y)) {
      throw Error(ErrorCode::NonFiniteCoordinate, "vertex coordinates must be finite");
    }
  }

  // Drop consecutive duplicates, including the closing wraparound.
  std::vector<Point> v;
  v.reserve(raw.size());
  for (const Point& p : raw) {
    if (v.empty() || linf(v.back(), p) > kTauGeo) v.push_back(p);
  }
  while (v.size() > 1 && linf(v.front(), v.back()) <= kTauGeo) v.pop_back();
  if (v.size() < 3) {
    throw Error(ErrorCode::DegenerateArea, "vertices collapse to a segment or point");
  }

  // Simplicity first: crossing inputs like the bowtie also have vanishing
  // signed area, and must be reported as self-intersecting, not degenerate.
  check_simple(v);

  double signed_area = shoelace(v);
  double w = 0.0, h = 0.0;
  {
    auto [minx, maxx] = std::minmax_element(v.begin(), v.end(),
                                            [](const Point& a, const Point& b) { return a.x < b.x; });
    auto [miny, maxy] = std::minmax_element(v.begin(), v.end(),
                                            [](const Point& a, const Point& b) { return a.y < b.y; });
    w = maxx->x - minx->x;
    h = maxy->y - miny->y;
  }
  if (std::abs(signed_area) <= kTauGeo * std::max(1.0, w * h)) {
    throw Error(ErrorCode::DegenerateArea, "polygon area is below tolerance");
  }
  if (signed_area < 0.0) std::reverse(v.begin(), v.end());

  // Merge collinear runs. Fold-back spikes (collinear with reversed
  // direction) make adjacent edges overlap; anything not already caught by
  // the pairwise test above is rejected here as a safety net.
  bool changed = true;
  while (changed && v.size() >= 3) {
    changed = false;
    for (std::size_t i = 0; i < v.size() && v.size() >= 3; ++i) {
      const std::size_t n = v.size();
      const Point& a = v[(i + n - 1) % n];
      const Point& b = v[i];
      const Point& c = v[(i + 1) % n];
      const double cr = cross3(a, b, c);
      if (std::abs(cr) < kTauGeo * edge_len(a, b) * edge_len(b, c)) {
        const double dot = (b.x - a.x) * (c.x - b.x) + (b.y - a.y) * (c.y - b.y);
        if (dot < 0.0) {
          throw Error(ErrorCode::SelfIntersecting, "fold-back spike at vertex " + std::to_string(i));
        }
        v.erase(v.begin() + static_cast<std::ptrdiff_t>(i));
        changed = true;
        --i;
      }
    }
  }
  if (v.size() < 3) {
    throw Error(ErrorCode::DegenerateArea, "vertices collapse to a segment or point");
  }

  // Canonical start vertex for reproducible output.
  const auto smallest = std::min_element(v.begin(), v.end(), [](const Point& a, const Point& b) {
    return a.x != b.x ? a.x < b.x : a.y < b.y;
  });
  std::rotate(v.begin(), smallest, v.end());

  return Polygon(std::move(v), std::move(name));
}

double area(const Polygon& p) { return shoelace(p.vertices()); }

double l1_perimeter(const Polygon& p) {
  const auto& v = p.vertices();
  const std::size_t n = v.size();
  double acc = 0.0;
  for (std::size_t i = 0, j = n - 1; i < n; j = i++) {
    acc += std::abs(v[i].x - v[j].x) + std::abs(v[i].y - v[j].y);
  }
  return acc;
}

Rect bounding_rect(const Polygon& p) {
  const auto& v = p.vertices();
  Rect r{v[0].x, v[0].y, v[0].x, v[0].y};
  for (const Point& q : v) {
    r.xmin = std::min(r.xmin, q.x);
    r.xmax = std::max(r.xmax, q.x);
    r.ymin = std::min(r.ymin, q.y);
    r.ymax = std::max(r.ymax, q.y);
  }
  return r;
}

RectParams rect_params(const Rect& r) {
  RectParams out;
  // width is the short side, height the long one, whichever axis they lie on.
  out.width = std::min(r.width(), r.height());
  out.height = std::max(r.width(), r.height());
  out.ell = 0.5 * (out.width + out.height);
  out.alpha = 0.25 * (out.height - out.width);
  return out;
}

Polygon transform(const Polygon& p, const Transform& t) {
  std::vector<Point> v = p.vertices();
  switch (t.kind) {
    case Transform::Kind::Translate:
      for (Point& q : v) {
        q.x += t.a;
        q.y += t.b;
      }
      break;
    case Transform::Kind::ReflectX:
      for (Point& q : v) q.x = -q.x;
      break;
    case Transform::Kind::ReflectY:
      for (Point& q : v) q.y = -q.y;
      break;
    case Transform::Kind::SwapXY:
      for (Point& q : v) std::swap(q.x, q.y);
      break;
    case Transform::Kind::Scale:
      if (!(t.a > 0.0)) {
        throw Error(ErrorCode::NonPositiveScale, "scale factor must be positive");
      }
      for (Point& q : v) {
        q.x *= t.a;
        q.y *= t.a;
      }
      break;
  }
  return validate_polygon(v, p.name());
}

double clip_to_square(const Polygon& p, const Square& s) {
  // Sutherland-Hodgman against each half-plane of the square window. For
  // nonconvex subjects the output can contain zero-width bridge edges along
  // the window boundary; the signed shoelace area is still the area of the
  // intersection.
  std::vector<Point> cur = p.vertices();
  std::vector<Point> next;
  next.reserve(cur.size() + 4);

  enum class Side { XMin, XMax, YMin, YMax };
  const Side sides[4] = {Side::XMin, Side::XMax, Side::YMin, Side::YMax};
  const double bounds[4] = {s.xmin(), s.xmax(), s.ymin(), s.ymax()};

  for (int k = 0; k < 4; ++k) {
    const double bound = bounds[k];
    const Side side = sides[k];
    auto inside = [&](const Point& q) {
      switch (side) {
        case Side::XMin: return q.x >= bound;
        case Side::XMax: return q.x <= bound;
        case Side::YMin: return q.y >= bound;
        case Side::YMax: return q.y <= bound;
      }
      return false;
    };
    auto intersect = [&](const Point& a, const Point& b) {
      if (side == Side::XMin || side == Side::XMax) {
        const double t = (bound - a.x) / (b.x - a.x);
        return Point{bound, a.y + t * (b.y - a.y)};
      }
      const double t = (bound - a.y) / (b.y - a.y);
      return Point{a.x + t * (b.x - a.x), bound};
    };

    next.clear();
    const std::size_t n = cur.size();
    for (std::size_t i = 0, j = n - 1; i < n; j = i++) {
      const Point& b = cur[i];
      const Point& a = cur[j];
      const bool bi = inside(b);
      const bool ai = inside(a);
      if (bi) {
        if (!ai) next.push_back(intersect(a, b));
        next.push_back(b);
      } else if (ai) {
        next.push_back(intersect(a, b));
      }
    }
    cur.swap(next);
    if (cur.size() < 3) return 0.0;
  }

  const double hi = std::min(area(p), s.side() * s.side());
  return std::clamp(shoelace(cur), 0.0, hi);
}

bool point_in_polygon(const Point& pt, const Polygon& p) {
  const auto& v = p.vertices();
  const std::size_t n = v.size();
  bool inside = false;
  for (std::size_t i = 0, j = n - 1; i < n; j = i++) {
    const Point& a = v[j];
    const Point& b = v[i];
    if ((b.y > pt.y) != (a.y > pt.y)) {
      const double xint = b.x + (pt.y - b.y) * (a.x - b.x) / (a.y - b.y);
      if (pt.x < xint) inside = !inside;
    }
  }
  return inside;
}

bool segment_meets_open_box(const Point& a, const Point& b, const Rect& box) {
  // Liang-Barsky clip of ab against the closed box, then a strict interior
  // test on the midpoint of the clipped parameter range. A segment whose
  // line passes through the open box has every interior clip parameter
  // strictly inside, so the midpoint decides exactly.
  const double dx = b.x - a.x;
  const double dy = b.y - a.y;
  double t0 = 0.0, t1 = 1.0;
  auto clip = [&](double p, double q) {
    if (p == 0.0) return q >= 0.0;
    const double r = q / p;
    if (p < 0.0) {
      if (r > t1) return false;
      if (r > t0) t0 = r;
    } else {
      if (r < t0) return false;
      if (r < t1) t1 = r;
    }
    return true;
  };
  if (!clip(-dx, a.x - box.xmin)) return false;
  if (!clip(dx, box.xmax - a.x)) return false;
  if (!clip(-dy, a.y - box.ymin)) return false;
  if (!clip(dy, box.ymax - a.y)) return false;
  if (t0 > t1) return false;
  const double tm = 0.5 * (t0 + t1);
  const double mx = a.x + tm * dx;
  const double my = a.y + tm * dy;
  return mx > box.xmin && mx < box.xmax && my > box.ymin && my < box.ymax;
}

}  // namespace isol1
