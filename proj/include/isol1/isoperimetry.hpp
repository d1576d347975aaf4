#pragma once

#include <optional>
#include <string>
#include <vector>

#include "isol1/fitting.hpp"
#include "isol1/geometry.hpp"

namespace isol1 {

/// Deficits smaller than this are treated as exact equality; the equality
/// ratio is undefined at or below it.
inline constexpr double kTauEps = 1e-9;

inline constexpr double kDefaultTol = 1e-5;

/// One verified inequality. passed is equivalent to lhs <= rhs +
/// slack_budget, where the slack budget is derived from the certificates of
/// the quantities involved (never a fixed constant). skipped marks checks
/// whose hypothesis does not hold for the shape (vacuously true).
struct CheckRecord {
  std::string name;
  double lhs = 0.0;
  double rhs = 0.0;
  double slack_budget = 0.0;
  bool passed = false;
  bool skipped = false;
};

/// Full numerical profile of one polygon.
struct IsoReport {
  std::string shape;
  double area = 0.0;
  double perimeter = 0.0;
  double epsilon = 0.0;
  double ell = 0.0;
  double alpha = 0.0;
  double delta = 0.0;
  double delta_gap = 0.0;
  double mu = 0.0;
  double mu_gap = 0.0;
  std::optional<double> q_ratio;
  double asymmetry = 0.0;
  std::optional<double> asymmetry_ratio;
  std::vector<CheckRecord> checks;

  bool all_passed() const;
};

/// Isoperimetric deficit from raw measurements: perimeter^2 / area - 16,
/// clamped to zero within kTauEps. More negative values violate the
/// taxicab isoperimetric inequality and raise NegativeBeyondTolerance.
double deficit_from_measurements(double perimeter, double area);

/// Isoperimetric deficit of a polygon.
double deficit(const Polygon& a);

/// Equality ratio Q = 64 * delta^2 / (epsilon * area), the sharpness measure
/// of the main stability bound. Undefined (nullopt) when the deficit is
/// within kTauEps of zero.
std::optional<double> equality_ratio(const Polygon& a, double tol = kDefaultTol,
                                     const FitOptions& opt = {});

/// delta^2 <= epsilon * area / 64 (main stability bound).
CheckRecord check_theorem_main(const Polygon& a, double tol = kDefaultTol,
                               const FitOptions& opt = {});

/// mu >= min(1 - eps/16, 2 - sqrt(1 + eps/16) - sqrt(eps)/4) (overlap
/// stability bound, proof form).
CheckRecord check_prop_area(const Polygon& a, double tol = kDefaultTol,
                            const FitOptions& opt = {});

/// Perimeter dominates the bounding-rectangle perimeter: 4*ell <= perimeter.
CheckRecord check_lemma_hull(const Polygon& a);

/// alpha^2 <= epsilon * area / 64 (primary record; full_report also emits
/// the flanking area <= ell^2 <= (16 + eps)/16 * area records).
CheckRecord check_lemma_alpha(const Polygon& a);

/// When delta exceeds alpha beyond slack: area <= ell^2 - 4*alpha^2 -
/// min(8*delta*(delta - alpha), 4*delta^2). Vacuously skipped otherwise.
CheckRecord check_lemma_excluded(const Polygon& a, double tol = kDefaultTol,
                                 const FitOptions& opt = {});

/// mu >= min(2 - (ell^2 - 4*alpha^2)/area, 2 - (ell + 2*alpha)/sqrt(area)).
CheckRecord check_lemma_mu(const Polygon& a, double tol = kDefaultTol,
                           const FitOptions& opt = {});

/// Runs both fits once and evaluates every check, including the
/// informational asymmetry-versus-sqrt(eps)/2 ratio.
IsoReport full_report(const Polygon& a, double tol = kDefaultTol, const FitOptions& opt = {});

}  // namespace isol1
