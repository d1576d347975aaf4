#pragma once

#include <variant>

#include "isol1/geometry.hpp"
#include "isol1/metrics.hpp"

namespace isol1 {

struct FitOptions {
  /// Cap on objective evaluations per fit (and on oracle grid size).
  long long eval_budget = 10'000'000;
  /// Certification resolution for the final Hausdorff evaluations;
  /// 0 selects tol / 8.
  double final_resolution = 0.0;
};

/// Result of minimizing the Hausdorff distance over squares. The true
/// minimum lies within optimality_gap below delta.
struct FitResult {
  Square square;
  double delta = 0.0;
  double optimality_gap = 0.0;
  long long evaluations = 0;
};

/// Result of maximizing the overlap fraction |S intersect A| / |A| over
/// squares of area equal to the polygon's. The true maximum lies within
/// optimality_gap above mu.
struct OverlapFit {
  Square square;
  double mu = 0.0;
  double optimality_gap = 0.0;
  long long evaluations = 0;
};

/// Minimizes d_inf(A, S) over square centers and half-sides. Centers range
/// over the bounding rectangle dilated by ell/2 and half-sides over
/// [ell/4, ell]. Uses a coarse certification grid plus multi-start pattern
/// search (3x3x3 lattice, the concentric square of half-side ell/2, and the
/// best grid point) with initial step ell/8, halving on failure, stopping at
/// step tol/4. The objective changes by at most the center displacement
/// (L-infinity) plus the half-side change, which converts the final step and
/// evaluation certificates into optimality_gap <= tol.
FitResult fit_square_hausdorff(const Polygon& a, double tol, const FitOptions& opt = {});

/// Maximizes the overlap fraction over centers of the square whose area
/// equals the polygon's (half-side fixed at sqrt(area)/2). Overlap areas are
/// exact clips, and the objective moves by at most side * |center motion|_1,
/// giving optimality_gap <= tol.
OverlapFit fit_square_overlap(const Polygon& a, double tol, const FitOptions& opt = {});

enum class FitMode { Hausdorff, Overlap };

/// Independent cross-check: exhaustive evaluation over the same search box
/// on a uniform grid of the given spacing, returning the best grid point
/// with a certificate from the same Lipschitz constants. Grids larger than
/// the evaluation budget raise GridTooFine. Grid points that provably cannot
/// beat the running best (by cheap lower bounds) are skipped without
/// changing the result.
std::variant<FitResult, OverlapFit> brute_force_fit_oracle(const Polygon& a, double grid_step,
                                                           FitMode mode,
                                                           const FitOptions& opt = {});

}  // namespace isol1
