#include "isol1/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <vector>

#include "isol1/errors.hpp"

namespace isol1 {

double dist_linf_point_to_square(const Point& p, const Square& s) {
  const double d = std::max(std::abs(p.x - s.cx), std::abs(p.y - s.cy)) - s.r;
  return std::max(0.0, d);
}

double dist_linf_point_to_segment(const Point& p, const Point& a, const Point& b) {
  const double dx = b.x - a.x;
  const double dy = b.y - a.y;
  const double ux = p.x - a.x;
  const double uy = p.y - a.y;
  auto value = [&](double t) {
    return std::max(std::abs(ux - t * dx), std::abs(uy - t * dy));
  };
  double best = std::min(value(0.0), value(1.0));
  auto consider = [&](double t) {
    if (t > 0.0 && t < 1.0) best = std::min(best, value(t));
  };
  if (dx != 0.0) consider(ux / dx);
  if (dy != 0.0) consider(uy / dy);
  if (dx != dy) consider((ux - uy) / (dx - dy));
  if (dx + dy != 0.0) consider((ux + uy) / (dx + dy));
  return best;
}

double dist_linf_point_to_polygon(const Point& p, const Polygon& poly) {
  const auto& v = poly.vertices();
  const std::size_t n = v.size();
  double m = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0, j = n - 1; i < n; j = i++) {
    m = std::min(m, dist_linf_point_to_segment(p, v[j], v[i]));
    if (m == 0.0) return 0.0;
  }
  return point_in_polygon(p, poly) ? 0.0 : m;
}

bool square_inside_polygon(const Square& s, const Polygon& poly) {
  const Rect box{s.xmin(), s.ymin(), s.xmax(), s.ymax()};
  const auto& v = poly.vertices();
  const std::size_t n = v.size();
  for (std::size_t i = 0, j = n - 1; i < n; j = i++) {
    if (segment_meets_open_box(v[j], v[i], box)) return false;
  }
  // No boundary edge enters the interior, so the connected interior lies
  // entirely inside or outside; the center decides.
  return dist_linf_point_to_polygon({s.cx, s.cy}, poly) == 0.0;
}

double default_hausdorff_resolution(const Polygon& p) {
  return 1e-6 * std::sqrt(area(p));
}

namespace {

struct Cell {
  double cx = 0.0;
  double cy = 0.0;
  double h = 0.0;  // half-size
  double ub = 0.0;
};

struct SupInterval {
  double lo = 0.0;
  double hi = 0.0;
};

// Upper bound for max over the cell of dist(., A), plus exact corner
// evaluations that tighten the running best. Interior cells (all of the
// cell inside A) are bounded by zero exactly.
double cell_upper_bound(const Polygon& a, double cx, double cy, double h, double& best) {
  const Point corners[4] = {
      {cx - h, cy - h}, {cx + h, cy - h}, {cx + h, cy + h}, {cx - h, cy + h}};
  const auto& v = a.vertices();
  const std::size_t n = v.size();

  double cmin[4];
  std::fill(std::begin(cmin), std::end(cmin), std::numeric_limits<double>::infinity());
  double ub = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0, j = n - 1; i < n; j = i++) {
    double edge_max = 0.0;
    for (int k = 0; k < 4; ++k) {
      const double d = dist_linf_point_to_segment(corners[k], v[j], v[i]);
      cmin[k] = std::min(cmin[k], d);
      edge_max = std::max(edge_max, d);
    }
    ub = std::min(ub, edge_max);
  }

  // Exact corner values: min edge distance outside A, zero inside. The
  // point-in-polygon test is only needed when the corner could raise best.
  for (int k = 0; k < 4; ++k) {
    if (cmin[k] > best && !point_in_polygon(corners[k], a)) best = cmin[k];
  }

  if (ub > best) {
    // The edge bound cannot rule out cells deep inside the polygon; detect
    // full containment exactly and bound those by zero.
    const Rect box{cx - h, cy - h, cx + h, cy + h};
    bool crossed = false;
    for (std::size_t i = 0, j = n - 1; i < n && !crossed; j = i++) {
      crossed = segment_meets_open_box(v[j], v[i], box);
    }
    if (!crossed && dist_linf_point_to_polygon({cx, cy}, a) == 0.0) return 0.0;
  }
  return ub;
}

// Certified enclosure of sup over the square of dist(., A), relative to a
// known floor (typically the exact polygon-to-square direction): regions
// provably below max(best, floor) are pruned, which keeps the returned
// interval valid for max(floor, sup). Refinement is level-synchronous so the
// evaluated point set, and hence the result, is independent of traversal
// order.
SupInterval sup_dist_over_square(const Polygon& a, const Square& s, double res,
                                 double floor_lo) {
  double best = 0.0;
  const Point probes[5] = {{s.cx, s.cy},
                           {s.cx, s.cy - s.r},
                           {s.cx, s.cy + s.r},
                           {s.cx - s.r, s.cy},
                           {s.cx + s.r, s.cy}};
  for (const Point& p : probes) best = std::max(best, dist_linf_point_to_polygon(p, a));

  if (best == 0.0 && square_inside_polygon(s, a)) return {0.0, 0.0};

  std::vector<Cell> cells;
  cells.push_back({s.cx, s.cy, s.r, 0.0});
  cells[0].ub = cell_upper_bound(a, s.cx, s.cy, s.r, best);

  std::vector<Cell> next;
  for (int level = 0; level <= 80; ++level) {
    const double cut = std::max(best, floor_lo);
    std::erase_if(cells, [&](const Cell& c) { return c.ub <= cut; });
    double gub = cut;
    for (const Cell& c : cells) gub = std::max(gub, c.ub);
    if (cells.empty() || gub - cut <= 2.0 * res) return {best, gub};
    if (cells.size() > 300000) {
      throw Error(ErrorCode::EvalBudgetExceeded,
                  "hausdorff refinement exceeded the internal cell budget");
    }

    next.clear();
    next.reserve(4 * cells.size());
    for (const Cell& c : cells) {
      const double h2 = 0.5 * c.h;
      for (int q = 0; q < 4; ++q) {
        const double qx = c.cx + ((q & 1) ? h2 : -h2);
        const double qy = c.cy + ((q & 2) ? h2 : -h2);
        Cell child{qx, qy, h2, 0.0};
        child.ub = cell_upper_bound(a, qx, qy, h2, best);
        next.push_back(child);
      }
    }
    cells.swap(next);
  }
  throw Error(ErrorCode::EvalBudgetExceeded, "hausdorff refinement did not converge");
}

}  // namespace

CertifiedValue hausdorff_linf(const Polygon& a, const Square& s, double resolution) {
  if (!(resolution > 0.0)) {
    throw Error(ErrorCode::NonPositiveResolution, "resolution must be positive");
  }
  double dir_a = 0.0;
  for (const Point& v : a.vertices()) {
    dir_a = std::max(dir_a, dist_linf_point_to_square(v, s));
  }
  const SupInterval sup = sup_dist_over_square(a, s, resolution, dir_a);
  const double lo = std::max(dir_a, sup.lo);
  const double hi = std::max(dir_a, sup.hi);
  return {0.5 * (lo + hi), 0.5 * (hi - lo)};
}

}  // namespace isol1
