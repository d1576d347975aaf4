#include "isol1/isoperimetry.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <utility>

#include "isol1/errors.hpp"

namespace isol1 {
namespace {

double float_slack(double x) { return 1e-9 * std::max(1.0, std::abs(x)); }

struct Measured {
  double area = 0.0;
  double perimeter = 0.0;
  double eps = 0.0;
  double ell = 0.0;
  double alpha = 0.0;
};

Measured measure(const Polygon& a) {
  Measured m;
  m.area = area(a);
  m.perimeter = l1_perimeter(a);
  m.eps = deficit_from_measurements(m.perimeter, m.area);
  const RectParams rp = rect_params(bounding_rect(a));
  m.ell = rp.ell;
  m.alpha = rp.alpha;
  return m;
}

CheckRecord make_record(std::string name, double lhs, double rhs, double slack,
                        bool skipped = false) {
  CheckRecord r;
  r.name = std::move(name);
  r.lhs = lhs;
  r.rhs = rhs;
  r.slack_budget = slack;
  r.skipped = skipped;
  r.passed = skipped || lhs <= rhs + slack;
  return r;
}

// delta enters squared, so a certificate u on delta widens the left side by
// at most 2*delta*u + u^2.
CheckRecord record_theorem_main(const Measured& m, double delta, double delta_gap) {
  const double lhs = delta * delta;
  const double rhs = m.eps * m.area / 64.0;
  const double slack =
      2.0 * delta * delta_gap + delta_gap * delta_gap + float_slack(rhs);
  return make_record("theorem_main", lhs, rhs, slack);
}

double prop_area_bound(double eps) {
  return std::min(1.0 - eps / 16.0,
                  2.0 - std::sqrt(1.0 + eps / 16.0) - std::sqrt(eps) / 4.0);
}

CheckRecord record_prop_area(const Measured& m, double mu, double mu_gap) {
  const double lhs = prop_area_bound(m.eps);
  return make_record("prop_area", lhs, mu, mu_gap + float_slack(mu));
}

CheckRecord record_lemma_hull(const Measured& m) {
  return make_record("lemma_hull", 4.0 * m.ell, m.perimeter,
                     float_slack(m.perimeter));
}

CheckRecord record_lemma_alpha_lower(const Measured& m) {
  const double rhs = m.ell * m.ell;
  return make_record("lemma_alpha_lower", m.area, rhs, float_slack(rhs));
}

CheckRecord record_lemma_alpha_upper(const Measured& m) {
  const double lhs = m.ell * m.ell;
  const double rhs = (16.0 + m.eps) / 16.0 * m.area;
  return make_record("lemma_alpha_upper", lhs, rhs, float_slack(rhs));
}

CheckRecord record_lemma_alpha(const Measured& m) {
  const double lhs = m.alpha * m.alpha;
  const double rhs = m.eps * m.area / 64.0;
  return make_record("lemma_alpha", lhs, rhs, float_slack(rhs));
}

// Applies only when delta > alpha; with a certificate u on delta the
// hypothesis is only trustworthy when delta clears alpha by more than u.
CheckRecord record_lemma_excluded(const Measured& m, double delta,
                                  double delta_gap) {
  if (delta <= m.alpha + delta_gap + float_slack(m.alpha)) {
    return make_record("lemma_excluded", m.area, 0.0, 0.0, /*skipped=*/true);
  }
  const double excluded =
      std::min(8.0 * delta * (delta - m.alpha), 4.0 * delta * delta);
  const double rhs = m.ell * m.ell - 4.0 * m.alpha * m.alpha - excluded;
  // Both branches of the excluded-area term move by at most 16*delta*u +
  // 8*u^2 when delta moves by u.
  const double slack = 16.0 * delta * delta_gap +
                       8.0 * delta_gap * delta_gap + float_slack(rhs);
  return make_record("lemma_excluded", m.area, rhs, slack);
}

double lemma_mu_bound(const Measured& m) {
  const double b1 = 2.0 - (m.ell * m.ell - 4.0 * m.alpha * m.alpha) / m.area;
  const double b2 = 2.0 - (m.ell + 2.0 * m.alpha) / std::sqrt(m.area);
  return std::min(b1, b2);
}

CheckRecord record_lemma_mu(const Measured& m, double mu, double mu_gap) {
  return make_record("lemma_mu", lemma_mu_bound(m), mu,
                     mu_gap + float_slack(mu));
}

}  // namespace

bool IsoReport::all_passed() const {
  return std::all_of(checks.begin(), checks.end(),
                     [](const CheckRecord& c) { return c.passed; });
}

double deficit_from_measurements(double perimeter, double area) {
  if (!(perimeter > 0.0) || !(area > 0.0)) {
    throw Error(ErrorCode::InvalidArgument,
                "deficit requires positive perimeter and area");
  }
  const double eps = perimeter * perimeter / area - 16.0;
  if (eps < -kTauEps) {
    std::ostringstream os;
    os << "deficit " << eps << " is below -" << kTauEps
       << "; perimeter^2 >= 16*area must hold for simple polygons";
    throw Error(ErrorCode::NegativeBeyondTolerance, os.str());
  }
  return std::max(eps, 0.0);
}

double deficit(const Polygon& a) {
  return deficit_from_measurements(l1_perimeter(a), area(a));
}

std::optional<double> equality_ratio(const Polygon& a, double tol,
                                     const FitOptions& opt) {
  const Measured m = measure(a);
  if (m.eps <= kTauEps) return std::nullopt;
  const FitResult fit = fit_square_hausdorff(a, tol, opt);
  return 64.0 * fit.delta * fit.delta / (m.eps * m.area);
}

CheckRecord check_theorem_main(const Polygon& a, double tol,
                               const FitOptions& opt) {
  const Measured m = measure(a);
  const FitResult fit = fit_square_hausdorff(a, tol, opt);
  return record_theorem_main(m, fit.delta, fit.optimality_gap);
}

CheckRecord check_prop_area(const Polygon& a, double tol,
                            const FitOptions& opt) {
  const Measured m = measure(a);
  const OverlapFit fit = fit_square_overlap(a, tol, opt);
  return record_prop_area(m, fit.mu, fit.optimality_gap);
}

CheckRecord check_lemma_hull(const Polygon& a) {
  return record_lemma_hull(measure(a));
}

CheckRecord check_lemma_alpha(const Polygon& a) {
  return record_lemma_alpha(measure(a));
}

CheckRecord check_lemma_excluded(const Polygon& a, double tol,
                                 const FitOptions& opt) {
  const Measured m = measure(a);
  const FitResult fit = fit_square_hausdorff(a, tol, opt);
  return record_lemma_excluded(m, fit.delta, fit.optimality_gap);
}

CheckRecord check_lemma_mu(const Polygon& a, double tol,
                           const FitOptions& opt) {
  const Measured m = measure(a);
  const OverlapFit fit = fit_square_overlap(a, tol, opt);
  return record_lemma_mu(m, fit.mu, fit.optimality_gap);
}

IsoReport full_report(const Polygon& a, double tol, const FitOptions& opt) {
  const Measured m = measure(a);
  const FitResult fh = fit_square_hausdorff(a, tol, opt);
  const OverlapFit fo = fit_square_overlap(a, tol, opt);

  IsoReport r;
  r.shape = a.name();
  r.area = m.area;
  r.perimeter = m.perimeter;
  r.epsilon = m.eps;
  r.ell = m.ell;
  r.alpha = m.alpha;
  r.delta = fh.delta;
  r.delta_gap = fh.optimality_gap;
  r.mu = fo.mu;
  r.mu_gap = fo.optimality_gap;
  if (m.eps > kTauEps) {
    r.q_ratio = 64.0 * fh.delta * fh.delta / (m.eps * m.area);
  }
  r.asymmetry = 2.0 * (1.0 - fo.mu);
  if (m.eps > kTauEps) {
    r.asymmetry_ratio = r.asymmetry / (std::sqrt(m.eps) / 2.0);
  }
  r.checks = {record_theorem_main(m, fh.delta, fh.optimality_gap),
              record_prop_area(m, fo.mu, fo.optimality_gap),
              record_lemma_hull(m),
              record_lemma_alpha_lower(m),
              record_lemma_alpha_upper(m),
              record_lemma_alpha(m),
              record_lemma_excluded(m, fh.delta, fh.optimality_gap),
              record_lemma_mu(m, fo.mu, fo.optimality_gap)};
  return r;
}

}  // namespace isol1
