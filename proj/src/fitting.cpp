#include "isol1/fitting.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <functional>
#include <limits>
#include <vector>

#include "isol1/errors.hpp"

namespace isol1 {

namespace {

template <int N>
struct Box {
  std::array<double, N> lo{};
  std::array<double, N> hi{};

  std::array<double, N> clamp(std::array<double, N> x) const {
    for (int i = 0; i < N; ++i) x[i] = std::clamp(x[i], lo[i], hi[i]);
    return x;
  }
};

std::vector<double> linspace(double a, double b, int n) {
  std::vector<double> out(static_cast<std::size_t>(n));
  const double step = (b - a) / static_cast<double>(n - 1);
  for (int i = 0; i < n; ++i) out[static_cast<std::size_t>(i)] = a + step * i;
  out.back() = b;
  return out;
}

int grid_count(double span, double step) {
  return std::max(2, static_cast<int>(std::floor(span / step)) + 2);
}

struct EvalCounter {
  long long count = 0;
  long long budget = 0;

  void tick() {
    if (++count > budget) {
      throw Error(ErrorCode::EvalBudgetExceeded,
                  "fit exceeded the evaluation budget of " + std::to_string(budget));
    }
  }
};

template <int N>
bool lex_less(const std::array<double, N>& a, const std::array<double, N>& b) {
  for (int i = 0; i < N; ++i) {
    if (a[i] != b[i]) return a[i] < b[i];
  }
  return false;
}

// Compass search with the full +-1 direction stencil, halving the step when
// no neighbor improves. Evaluation resolution follows the step so coarse
// stages stay cheap; the last levels run at the final resolution.
template <int N, class Eval, class ResOf>
std::pair<std::array<double, N>, CertifiedValue> pattern_search(
    const Box<N>& box, std::array<double, N> x0, double s_begin, double s_end, Eval&& eval,
    ResOf&& res_of) {
  std::array<double, N> x = box.clamp(x0);
  double s = s_begin;
  CertifiedValue fx = eval(x, res_of(s));

  int dir_count = 1;
  for (int i = 0; i < N; ++i) dir_count *= 3;

  while (s > s_end) {
    bool improved = true;
    int moves = 0;
    while (improved && moves < 100) {
      improved = false;
      std::array<double, N> best_x = x;
      CertifiedValue best_f = fx;
      for (int d = 0; d < dir_count; ++d) {
        int rem = d;
        std::array<double, N> y = x;
        bool zero = true;
        for (int i = 0; i < N; ++i) {
          const int o = rem % 3 - 1;
          rem /= 3;
          if (o != 0) zero = false;
          y[i] += s * o;
        }
        if (zero) continue;
        y = box.clamp(y);
        if (y == x) continue;
        const CertifiedValue fy = eval(y, res_of(s));
        if (fy.value < best_f.value) {
          best_f = fy;
          best_x = y;
        }
      }
      if (best_x != x) {
        x = best_x;
        fx = best_f;
        improved = true;
        ++moves;
      }
    }
    s *= 0.5;
    if (s > s_end) fx = eval(x, res_of(s));
  }
  return {x, fx};
}

struct SearchGeometry {
  Rect rect;
  RectParams params;
};

SearchGeometry search_geometry(const Polygon& a) {
  SearchGeometry g;
  g.rect = bounding_rect(a);
  g.params = rect_params(g.rect);
  return g;
}

}  // namespace

FitResult fit_square_hausdorff(const Polygon& a, double tol, const FitOptions& opt) {
  if (!(tol > 0.0)) {
    throw Error(ErrorCode::NonPositiveTolerance, "tol must be positive");
  }
  const SearchGeometry g = search_geometry(a);
  const double ell = g.params.ell;
  const Box<3> box{{g.rect.xmin - 0.5 * ell, g.rect.ymin - 0.5 * ell, 0.25 * ell},
                   {g.rect.xmax + 0.5 * ell, g.rect.ymax + 0.5 * ell, ell}};

  const double res_final = opt.final_resolution > 0.0 ? opt.final_resolution : tol / 8.0;
  EvalCounter counter{0, opt.eval_budget};
  auto eval = [&](const std::array<double, 3>& x, double res) {
    counter.tick();
    return hausdorff_linf(a, Square{x[0], x[1], x[2]}, res);
  };
  auto res_of = [&](double s) { return std::max(res_final, s / 8.0); };

  // Coarse exhaustive grid: Lipschitz floor for the global certificate and
  // one extra seed.
  const double h = ell / 8.0;
  const double res_grid = std::max(res_final, ell / 64.0);
  const int nx = grid_count(box.hi[0] - box.lo[0], h);
  const int ny = grid_count(box.hi[1] - box.lo[1], h);
  const int nr = grid_count(box.hi[2] - box.lo[2], h);
  const auto gx = linspace(box.lo[0], box.hi[0], nx);
  const auto gy = linspace(box.lo[1], box.hi[1], ny);
  const auto gr = linspace(box.lo[2], box.hi[2], nr);
  double grid_best = std::numeric_limits<double>::infinity();
  std::array<double, 3> grid_best_x{};
  for (double cx : gx) {
    for (double cy : gy) {
      for (double r : gr) {
        const std::array<double, 3> x{cx, cy, r};
        const double v = eval(x, res_grid).value;
        if (v < grid_best) {
          grid_best = v;
          grid_best_x = x;
        }
      }
    }
  }
  const double step_dev = 0.5 * std::max((box.hi[0] - box.lo[0]) / (nx - 1),
                                         (box.hi[1] - box.lo[1]) / (ny - 1)) +
                          0.5 * (box.hi[2] - box.lo[2]) / (nr - 1);
  const double grid_floor = grid_best - step_dev - res_grid;

  std::vector<std::array<double, 3>> seeds;
  for (double fx : {0.25, 0.5, 0.75}) {
    for (double fy : {0.25, 0.5, 0.75}) {
      for (double fr : {0.25, 0.5, 0.75}) {
        seeds.push_back({box.lo[0] + fx * (box.hi[0] - box.lo[0]),
                         box.lo[1] + fy * (box.hi[1] - box.lo[1]),
                         box.lo[2] + fr * (box.hi[2] - box.lo[2])});
      }
    }
  }
  seeds.push_back({g.rect.center().x, g.rect.center().y, 0.5 * ell});
  seeds.push_back(grid_best_x);

  // Stage one: every seed down to a mid step. Stage two: the few best
  // distinct candidates continue to the target step.
  const double s_begin = ell / 8.0;
  const double s_stop = tol / 4.0;
  const double s_mid = std::max(s_stop, ell / 64.0);

  std::vector<std::pair<std::array<double, 3>, CertifiedValue>> stage1;
  stage1.reserve(seeds.size());
  for (const auto& s0 : seeds) {
    stage1.push_back(pattern_search<3>(box, s0, s_begin, s_mid, eval, res_of));
  }
  std::stable_sort(stage1.begin(), stage1.end(), [](const auto& l, const auto& r) {
    if (l.second.value != r.second.value) return l.second.value < r.second.value;
    return lex_less<3>(l.first, r.first);
  });
  std::vector<std::array<double, 3>> chosen;
  for (const auto& [x, f] : stage1) {
    bool distinct = true;
    for (const auto& c : chosen) {
      const double d = std::max({std::abs(c[0] - x[0]), std::abs(c[1] - x[1]),
                                 std::abs(c[2] - x[2])});
      if (d <= ell / 64.0) {
        distinct = false;
        break;
      }
    }
    if (distinct) chosen.push_back(x);
    if (chosen.size() >= 4) break;
  }

  std::vector<std::pair<std::array<double, 3>, CertifiedValue>> finals;
  finals.reserve(chosen.size());
  for (const auto& x : chosen) {
    finals.push_back(pattern_search<3>(box, x, s_mid, s_stop, eval, res_of));
  }

  // Deterministic tie-break: smallest parameters among equally good results.
  double best_val = std::numeric_limits<double>::infinity();
  for (const auto& [x, f] : finals) best_val = std::min(best_val, f.value);
  const double tie = 1e-12 * std::max(1.0, ell);
  const std::pair<std::array<double, 3>, CertifiedValue>* pick = nullptr;
  for (const auto& cand : finals) {
    if (cand.second.value > best_val + tie) continue;
    if (pick == nullptr || lex_less<3>(cand.first, pick->first)) pick = &cand;
  }

  FitResult out;
  out.square = Square{pick->first[0], pick->first[1], pick->first[2]};
  out.delta = std::max(0.0, pick->second.value);
  const double gap_local = 2.0 * s_stop + 2.0 * pick->second.upper_gap;
  const double gap_global = std::max(0.0, out.delta - grid_floor);
  out.optimality_gap = std::max(pick->second.upper_gap, std::min(gap_local, gap_global));
  out.evaluations = counter.count;
  return out;
}

OverlapFit fit_square_overlap(const Polygon& a, double tol, const FitOptions& opt) {
  if (!(tol > 0.0)) {
    throw Error(ErrorCode::NonPositiveTolerance, "tol must be positive");
  }
  const SearchGeometry g = search_geometry(a);
  const double ell = g.params.ell;
  const double total = area(a);
  const double r0 = 0.5 * std::sqrt(total);
  const Box<2> box{{g.rect.xmin - r0, g.rect.ymin - r0},
                   {g.rect.xmax + r0, g.rect.ymax + r0}};

  EvalCounter counter{0, opt.eval_budget};
  // Minimize the negated overlap fraction; clips are exact so the
  // certificate gap per evaluation is zero.
  auto eval = [&](const std::array<double, 2>& x, double) {
    counter.tick();
    return CertifiedValue{-clip_to_square(a, Square{x[0], x[1], r0}) / total, 0.0};
  };
  auto res_of = [](double) { return 0.0; };

  const double h = ell / 8.0;
  const int nx = grid_count(box.hi[0] - box.lo[0], h);
  const int ny = grid_count(box.hi[1] - box.lo[1], h);
  const auto gx = linspace(box.lo[0], box.hi[0], nx);
  const auto gy = linspace(box.lo[1], box.hi[1], ny);
  double grid_best = std::numeric_limits<double>::infinity();
  std::array<double, 2> grid_best_x{};
  for (double cx : gx) {
    for (double cy : gy) {
      const std::array<double, 2> x{cx, cy};
      const double v = eval(x, 0.0).value;
      if (v < grid_best) {
        grid_best = v;
        grid_best_x = x;
      }
    }
  }
  // Overlap area moves by at most the side length per unit of L1 center
  // motion, so half a grid step per axis bounds the unseen improvement.
  const double step_sum = 0.5 * ((box.hi[0] - box.lo[0]) / (nx - 1) +
                                 (box.hi[1] - box.lo[1]) / (ny - 1));
  const double mu_ceiling = -grid_best + step_sum / (2.0 * r0);

  std::vector<std::array<double, 2>> seeds;
  for (double fx : {0.25, 0.5, 0.75}) {
    for (double fy : {0.25, 0.5, 0.75}) {
      seeds.push_back({box.lo[0] + fx * (box.hi[0] - box.lo[0]),
                       box.lo[1] + fy * (box.hi[1] - box.lo[1])});
    }
  }
  seeds.push_back({g.rect.center().x, g.rect.center().y});
  seeds.push_back(grid_best_x);

  const double s_stop = std::max(0.5 * tol * r0, 1e-14 * std::max(1.0, ell));
  std::vector<std::pair<std::array<double, 2>, CertifiedValue>> finals;
  finals.reserve(seeds.size());
  for (const auto& s0 : seeds) {
    finals.push_back(pattern_search<2>(box, s0, ell / 8.0, s_stop, eval, res_of));
  }

  double best_val = std::numeric_limits<double>::infinity();
  for (const auto& [x, f] : finals) best_val = std::min(best_val, f.value);
  const double tie = 1e-12;
  const std::pair<std::array<double, 2>, CertifiedValue>* pick = nullptr;
  for (const auto& cand : finals) {
    if (cand.second.value > best_val + tie) continue;
    if (pick == nullptr || lex_less<2>(cand.first, pick->first)) pick = &cand;
  }

  OverlapFit out;
  out.square = Square{pick->first[0], pick->first[1], r0};
  out.mu = std::clamp(-pick->second.value, 0.0, 1.0);
  const double gap_local = 2.0 * s_stop / (2.0 * r0);
  const double gap_global = std::max(0.0, mu_ceiling - out.mu);
  out.optimality_gap = std::min(gap_local, gap_global);
  out.evaluations = counter.count;
  return out;
}

std::variant<FitResult, OverlapFit> brute_force_fit_oracle(const Polygon& a, double grid_step,
                                                           FitMode mode,
                                                           const FitOptions& opt) {
  if (!(grid_step > 0.0)) {
    throw Error(ErrorCode::InvalidArgument, "grid_step must be positive");
  }
  const SearchGeometry g = search_geometry(a);
  const double ell = g.params.ell;

  if (mode == FitMode::Overlap) {
    const double total = area(a);
    const double r0 = 0.5 * std::sqrt(total);
    const Box<2> box{{g.rect.xmin - r0, g.rect.ymin - r0},
                     {g.rect.xmax + r0, g.rect.ymax + r0}};
    const int nx = grid_count(box.hi[0] - box.lo[0], grid_step);
    const int ny = grid_count(box.hi[1] - box.lo[1], grid_step);
    if (static_cast<long long>(nx) * ny > opt.eval_budget) {
      throw Error(ErrorCode::GridTooFine, "overlap oracle grid exceeds the evaluation budget");
    }
    const auto gx = linspace(box.lo[0], box.hi[0], nx);
    const auto gy = linspace(box.lo[1], box.hi[1], ny);
    OverlapFit out;
    out.square = Square{gx[0], gy[0], r0};
    out.mu = -1.0;
    for (double cx : gx) {
      for (double cy : gy) {
        const double mu = clip_to_square(a, Square{cx, cy, r0}) / total;
        if (mu > out.mu) {
          out.mu = mu;
          out.square = Square{cx, cy, r0};
        }
      }
    }
    out.mu = std::clamp(out.mu, 0.0, 1.0);
    const double step_sum = 0.5 * ((box.hi[0] - box.lo[0]) / (nx - 1) +
                                   (box.hi[1] - box.lo[1]) / (ny - 1));
    out.optimality_gap = step_sum / (2.0 * r0);
    out.evaluations = static_cast<long long>(nx) * ny;
    return out;
  }

  const Box<3> box{{g.rect.xmin - 0.5 * ell, g.rect.ymin - 0.5 * ell, 0.25 * ell},
                   {g.rect.xmax + 0.5 * ell, g.rect.ymax + 0.5 * ell, ell}};
  const int nx = grid_count(box.hi[0] - box.lo[0], grid_step);
  const int ny = grid_count(box.hi[1] - box.lo[1], grid_step);
  const int nr = grid_count(box.hi[2] - box.lo[2], grid_step);
  const long long total_points = static_cast<long long>(nx) * ny * nr;
  if (total_points > opt.eval_budget) {
    throw Error(ErrorCode::GridTooFine, "hausdorff oracle grid exceeds the evaluation budget");
  }
  const auto gx = linspace(box.lo[0], box.hi[0], nx);
  const auto gy = linspace(box.lo[1], box.hi[1], ny);
  const auto gr = linspace(box.lo[2], box.hi[2], nr);
  const double res_o = grid_step / 4.0;

  // Cheap lower bound per grid point: the exact vertex direction (distance
  // of the farthest polygon vertex beyond the square) never exceeds the
  // Hausdorff distance. Points are then visited in ascending bound order and
  // fully evaluated only while the bound can still beat the best value, so
  // the result equals full enumeration.
  const auto& verts = a.vertices();
  struct Entry {
    double lb;
    std::int64_t idx;
  };
  std::vector<Entry> entries;
  entries.reserve(static_cast<std::size_t>(total_points));
  for (int ix = 0; ix < nx; ++ix) {
    for (int iy = 0; iy < ny; ++iy) {
      double reach = 0.0;
      for (const Point& v : verts) {
        reach = std::max(reach, std::max(std::abs(v.x - gx[static_cast<std::size_t>(ix)]),
                                         std::abs(v.y - gy[static_cast<std::size_t>(iy)])));
      }
      for (int ir = 0; ir < nr; ++ir) {
        const double lb = std::max(0.0, reach - gr[static_cast<std::size_t>(ir)]);
        const std::int64_t idx = (static_cast<std::int64_t>(ix) * ny + iy) * nr + ir;
        entries.push_back({lb, idx});
      }
    }
  }
  std::sort(entries.begin(), entries.end(), [](const Entry& l, const Entry& r) {
    if (l.lb != r.lb) return l.lb < r.lb;
    return l.idx < r.idx;
  });

  double best = std::numeric_limits<double>::infinity();
  std::int64_t best_idx = -1;
  Square best_sq{};
  long long full_evals = 0;
  for (const Entry& e : entries) {
    if (e.lb > best) break;
    const int ir = static_cast<int>(e.idx % nr);
    const int iy = static_cast<int>((e.idx / nr) % ny);
    const int ix = static_cast<int>(e.idx / (static_cast<std::int64_t>(nr) * ny));
    const Square s{gx[static_cast<std::size_t>(ix)], gy[static_cast<std::size_t>(iy)],
                   gr[static_cast<std::size_t>(ir)]};
    // Second bound: square corners must be matched by the polygon.
    double corner_lb = 0.0;
    const Point corners[4] = {{s.xmin(), s.ymin()},
                              {s.xmax(), s.ymin()},
                              {s.xmax(), s.ymax()},
                              {s.xmin(), s.ymax()}};
    for (const Point& c : corners) {
      corner_lb = std::max(corner_lb, dist_linf_point_to_polygon(c, a));
    }
    if (std::max(e.lb, corner_lb) > best) continue;
    const double v = hausdorff_linf(a, s, res_o).value;
    ++full_evals;
    if (v < best || (v == best && e.idx < best_idx)) {
      best = v;
      best_idx = e.idx;
      best_sq = s;
    }
  }

  FitResult out;
  out.square = best_sq;
  out.delta = std::max(0.0, best);
  const double step_dev = 0.5 * std::max((box.hi[0] - box.lo[0]) / (nx - 1),
                                         (box.hi[1] - box.lo[1]) / (ny - 1)) +
                          0.5 * (box.hi[2] - box.lo[2]) / (nr - 1);
  out.optimality_gap = step_dev + res_o;
  out.evaluations = total_points;
  (void)full_evals;
  return out;
}

}  // namespace isol1
