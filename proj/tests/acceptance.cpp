// Acceptance suite: end-to-end numerical criteria with pinned tolerances.
// Each criterion prints exactly one [PASS]/[FAIL] line; the process exit
// code is the number of failed criteria.

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <exception>
#include <functional>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "isol1/cli.hpp"
#include "isol1/errors.hpp"
#include "isol1/extremal.hpp"
#include "isol1/fitting.hpp"
#include "isol1/geometry.hpp"
#include "isol1/isoperimetry.hpp"
#include "isol1/prng.hpp"

using namespace isol1;

namespace {

double now_seconds() {
  using clock = std::chrono::steady_clock;
  static const clock::time_point start = clock::now();
  return std::chrono::duration<double>(clock::now() - start).count();
}

template <typename F>
void parallel_for(std::size_t n, F&& body) {
  std::atomic<std::size_t> next{0};
  std::vector<std::exception_ptr> errors(n);
  std::size_t workers =
      std::min<std::size_t>(std::max(1u, std::thread::hardware_concurrency()),
                            std::max<std::size_t>(n, 1));
  auto run = [&] {
    for (;;) {
      const std::size_t i = next.fetch_add(1);
      if (i >= n) return;
      try {
        body(i);
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };
  std::vector<std::thread> pool;
  for (std::size_t t = 1; t < workers; ++t) pool.emplace_back(run);
  run();
  for (std::thread& t : pool) t.join();
  for (const std::exception_ptr& e : errors) {
    if (e) std::rethrow_exception(e);
  }
}

struct Outcome {
  bool ok = true;
  std::string detail;

  void fail(const std::string& why) {
    ok = false;
    if (!detail.empty()) detail += "; ";
    detail += why;
  }
};

std::string fmt(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.3g", v);
  return buf;
}

// ---------------------------------------------------------------------------
// 1. Both extremal families saturate the main bound: epsilon matches the
//    closed form to 1e-9 relative, fitted delta matches the parameter to
//    1e-5, and Q = 64*delta^2/(eps*area) is 1 within 1e-4. Under 30 s.
Outcome criterion_extremal_saturation() {
  Outcome out;
  const double t0 = now_seconds();
  const std::vector<double> params = {0.05, 0.1, 0.2, 0.3, 0.4};
  struct Case {
    Polygon poly;
    double p;
  };
  std::vector<Case> cases;
  for (double p : params) {
    cases.push_back({gen_rectangle(p), p});
    cases.push_back({gen_corner_deleted(p), p});
  }
  std::vector<std::string> problems(cases.size());
  double worst_q = 0.0, worst_delta = 0.0, worst_eps = 0.0;
  std::vector<double> qs(cases.size()), ds(cases.size()), es(cases.size());
  parallel_for(cases.size(), [&](std::size_t i) {
    const Polygon& a = cases[i].poly;
    const double p = cases[i].p;
    const double A = area(a);
    const double eps = deficit(a);
    const double eps_expected = 64.0 * p * p / (1.0 - 4.0 * p * p);
    es[i] = std::abs(eps - eps_expected) / eps_expected;
    const FitResult fit = fit_square_hausdorff(a, 1e-6);
    ds[i] = std::abs(fit.delta - p);
    qs[i] = std::abs(64.0 * fit.delta * fit.delta / (eps * A) - 1.0);
    std::ostringstream bad;
    if (es[i] > 1e-9) bad << a.name() << " eps rel err " << es[i];
    if (ds[i] > 1e-5) bad << a.name() << " delta err " << ds[i];
    if (qs[i] > 1e-4) bad << a.name() << " |Q-1| " << qs[i];
    problems[i] = bad.str();
  });
  for (std::size_t i = 0; i < cases.size(); ++i) {
    if (!problems[i].empty()) out.fail(problems[i]);
    worst_eps = std::max(worst_eps, es[i]);
    worst_delta = std::max(worst_delta, ds[i]);
    worst_q = std::max(worst_q, qs[i]);
  }
  const double elapsed = now_seconds() - t0;
  if (elapsed >= 30.0) out.fail("took " + fmt(elapsed) + " s (limit 30)");
  out.detail += "worst eps rel " + fmt(worst_eps) + ", delta err " +
                fmt(worst_delta) + ", |Q-1| " + fmt(worst_q) + ", " +
                fmt(elapsed) + " s";
  return out;
}

// ---------------------------------------------------------------------------
// 2. Overlap closed form for rectangles: |S cap A| within 1e-4 of
//    (1-2a)*sqrt(1-4a^2); mu at a=0.1 equals 0.81650 within 1e-4.
Outcome criterion_overlap_closed_form() {
  Outcome out;
  double worst = 0.0;
  for (double p : {0.05, 0.1, 0.2}) {
    const Polygon a = gen_rectangle(p);
    const OverlapFit fit = fit_square_overlap(a, 1e-5);
    const double got_area = fit.mu * area(a);
    const double want_area = (1.0 - 2.0 * p) * std::sqrt(1.0 - 4.0 * p * p);
    const double err = std::abs(got_area - want_area);
    worst = std::max(worst, err);
    if (err > 1e-4) {
      out.fail(a.name() + " overlap area err " + fmt(err));
    }
    if (p == 0.1 && std::abs(fit.mu - 0.8164965809277261) > 1e-4) {
      out.fail("mu(0.1) = " + fmt(fit.mu));
    }
  }
  out.detail += "worst overlap area err " + fmt(worst);
  return out;
}

// ---------------------------------------------------------------------------
// 3. 200 staircase shapes: every check passes within its computed slack and
//    max Q stays below 1 + 1e-4. Under 5 min.
Outcome criterion_corpus_validity() {
  Outcome out;
  const double t0 = now_seconds();
  const std::vector<Polygon> corpus = staircase_corpus(1, 200);
  std::vector<IsoReport> reports(corpus.size());
  parallel_for(corpus.size(), [&](std::size_t i) {
    reports[i] = full_report(corpus[i], 5e-6);
  });
  int violations = 0;
  double max_q = 0.0;
  for (const IsoReport& r : reports) {
    for (const CheckRecord& c : r.checks) {
      if (!c.passed) {
        ++violations;
        out.fail(r.shape + " violates " + c.name);
      }
    }
    if (r.q_ratio) max_q = std::max(max_q, *r.q_ratio);
  }
  if (max_q > 1.0 + 1e-4) out.fail("max Q " + fmt(max_q));
  const double elapsed = now_seconds() - t0;
  if (elapsed >= 300.0) out.fail("took " + fmt(elapsed) + " s (limit 300)");
  out.detail += std::to_string(violations) + " violations, max Q " +
                fmt(max_q) + ", " + fmt(elapsed) + " s";
  return out;
}

// ---------------------------------------------------------------------------
// 4. Pattern search agrees with the exhaustive grid oracle within
//    tol + oracle certificate on 20 corpus shapes, both objectives.
Outcome criterion_oracle_equivalence() {
  Outcome out;
  const std::vector<Polygon> corpus = staircase_corpus(1, 20);
  std::vector<std::string> problems(corpus.size());
  std::vector<double> dgap(corpus.size()), mgap(corpus.size());
  parallel_for(corpus.size(), [&](std::size_t i) {
    const Polygon& a = corpus[i];
    const double step = 0.01 * std::sqrt(area(a));
    std::ostringstream bad;

    const FitResult fit = fit_square_hausdorff(a, 1e-5);
    const auto h = brute_force_fit_oracle(a, step, FitMode::Hausdorff);
    const FitResult& ho = std::get<FitResult>(h);
    dgap[i] = std::abs(fit.delta - ho.delta);
    if (dgap[i] > 1e-5 + ho.optimality_gap + 1e-12) {
      bad << a.name() << " delta mismatch " << dgap[i] << " > "
          << 1e-5 + ho.optimality_gap;
    }

    const OverlapFit ov = fit_square_overlap(a, 1e-5);
    const auto o = brute_force_fit_oracle(a, step, FitMode::Overlap);
    const OverlapFit& oo = std::get<OverlapFit>(o);
    mgap[i] = std::abs(ov.mu - oo.mu);
    if (mgap[i] > 1e-5 + oo.optimality_gap + 1e-12) {
      bad << a.name() << " mu mismatch " << mgap[i] << " > "
          << 1e-5 + oo.optimality_gap;
    }
    problems[i] = bad.str();
  });
  double wd = 0.0, wm = 0.0;
  for (std::size_t i = 0; i < corpus.size(); ++i) {
    if (!problems[i].empty()) out.fail(problems[i]);
    wd = std::max(wd, dgap[i]);
    wm = std::max(wm, mgap[i]);
  }
  out.detail += "worst |delta-oracle| " + fmt(wd) + ", |mu-oracle| " + fmt(wm);
  return out;
}

// ---------------------------------------------------------------------------
// 5. Taxicab isometries leave eps, Q and mu unchanged and move delta
//    covariantly (factor lambda for scaling), all within 2e-5.
Outcome criterion_invariance() {
  Outcome out;
  const std::vector<Polygon> corpus = staircase_corpus(1, 50);
  struct Variant {
    std::string label;
    Transform t;
    double lambda;
    double tol;
  };
  const std::vector<Variant> variants = {
      {"translate", Transform::translate(0.31, -0.47), 1.0, 1e-5},
      {"reflect_x", Transform::reflect_x(), 1.0, 1e-5},
      {"reflect_y", Transform::reflect_y(), 1.0, 1e-5},
      {"swap_xy", Transform::swap_xy(), 1.0, 1e-5},
      {"scale", Transform::scale(3.0), 3.0, 3e-5},
  };
  std::vector<std::string> problems(corpus.size());
  std::vector<double> drift(corpus.size(), 0.0);
  parallel_for(corpus.size(), [&](std::size_t i) {
    const Polygon& a = corpus[i];
    const double A = area(a);
    const double eps = deficit(a);
    const FitResult fh = fit_square_hausdorff(a, 1e-5);
    const OverlapFit fo = fit_square_overlap(a, 1e-5);
    const double q = 64.0 * fh.delta * fh.delta / (eps * A);
    std::ostringstream bad;
    for (const Variant& v : variants) {
      const Polygon b = transform(a, v.t);
      const double At = area(b);
      const double epst = deficit(b);
      const FitResult fht = fit_square_hausdorff(b, v.tol);
      const OverlapFit fot = fit_square_overlap(b, v.tol);
      const double qt = 64.0 * fht.delta * fht.delta / (epst * At);
      const double d_eps = std::abs(epst - eps);
      const double d_q = std::abs(qt - q);
      const double d_mu = std::abs(fot.mu - fo.mu);
      const double d_delta = std::abs(fht.delta - v.lambda * fh.delta);
      const double worst = std::max({d_eps, d_q, d_mu, d_delta});
      drift[i] = std::max(drift[i], worst);
      if (worst > 2e-5) {
        bad << a.name() << " " << v.label << " drift " << worst << " ";
      }
    }
    problems[i] = bad.str();
  });
  double w = 0.0;
  for (std::size_t i = 0; i < corpus.size(); ++i) {
    if (!problems[i].empty()) out.fail(problems[i]);
    w = std::max(w, drift[i]);
  }
  out.detail += "worst drift " + fmt(w);
  return out;
}

// ---------------------------------------------------------------------------
// 6. Sweeping thin rectangles 0.005..0.1, the ratio of measured asymmetry to
//    sqrt(eps)/2 climbs monotonically towards 1 as the parameter shrinks and
//    reaches at least 0.95.
Outcome criterion_asymmetry_trend() {
  Outcome out;
  const RangeSpec range{0.005, 0.1, 8};
  const std::vector<double> params = range.values();
  std::vector<double> ratios(params.size());
  parallel_for(params.size(), [&](std::size_t i) {
    const Polygon a = gen_rectangle(params[i]);
    const double eps = deficit(a);
    const OverlapFit fit = fit_square_overlap(a, 1e-5);
    const double asymmetry = 2.0 * (1.0 - fit.mu);
    ratios[i] = asymmetry / (std::sqrt(eps) / 2.0);
  });
  for (std::size_t i = 0; i + 1 < ratios.size(); ++i) {
    // Ascending parameter order, so the ratio must fall along the list.
    if (!(ratios[i] > ratios[i + 1])) {
      out.fail("not monotone at param " + fmt(params[i]));
    }
  }
  if (!(ratios.front() >= 0.95)) {
    out.fail("final ratio " + fmt(ratios.front()) + " < 0.95");
  }
  out.detail += "ratio range [" + fmt(ratios.back()) + ", " +
                fmt(ratios.front()) + "]";
  return out;
}

// ---------------------------------------------------------------------------
// 7. Shapes sandwiched between concentric squares of half-sides r1 < r2 sit
//    within (r2 - r1)/2 of some square.
Polygon sandwich_shape(std::uint64_t seed, double* r1_out) {
  const double r2 = 0.5;
  std::uint64_t k = 0;
  auto u = [&] { return unit_uniform(seed, k++); };
  const double r1 = 0.25 + 0.2 * u();
  *r1_out = r1;
  const double max_depth = 0.9 * (r2 - r1);

  // Per side: one or two inward rectangular notches. Spans stay at least
  // max_depth away from both corners, so notch rectangles cut into
  // different sides can never meet each other.
  struct Notch {
    double a, b, d;
  };
  const double lo = max_depth + 0.03;
  const double hi = 1.0 - max_depth - 0.03;
  auto side_notches = [&] {
    std::vector<Notch> notches;
    const int count = u() < 0.5 ? 1 : 2;
    if (count == 1) {
      const double w = 0.08 + 0.20 * u();
      const double a = lo + (hi - lo - w) * u();
      notches.push_back({a, a + w, (0.25 + 0.75 * u()) * max_depth});
    } else {
      const double mid = 0.5 * (lo + hi);
      const double half = mid - lo - 0.025;
      const double w1 = 0.06 + 0.10 * u();
      const double a1 = lo + (half - w1) * u();
      const double w2 = 0.06 + 0.10 * u();
      const double a2 = mid + 0.025 + (half - w2) * u();
      notches.push_back({a1, a1 + w1, (0.25 + 0.75 * u()) * max_depth});
      notches.push_back({a2, a2 + w2, (0.25 + 0.75 * u()) * max_depth});
    }
    return notches;
  };

  std::vector<Point> v;
  // Bottom, left to right; notches dig upward.
  v.push_back({0, 0});
  for (const Notch& n : side_notches()) {
    v.push_back({n.a, 0});
    v.push_back({n.a, n.d});
    v.push_back({n.b, n.d});
    v.push_back({n.b, 0});
  }
  v.push_back({1, 0});
  // Right, bottom to top; notches dig leftward.
  for (const Notch& n : side_notches()) {
    v.push_back({1, n.a});
    v.push_back({1 - n.d, n.a});
    v.push_back({1 - n.d, n.b});
    v.push_back({1, n.b});
  }
  v.push_back({1, 1});
  // Top, right to left; notches dig downward.
  {
    std::vector<Notch> notches = side_notches();
    for (auto it = notches.rbegin(); it != notches.rend(); ++it) {
      v.push_back({it->b, 1});
      v.push_back({it->b, 1 - it->d});
      v.push_back({it->a, 1 - it->d});
      v.push_back({it->a, 1});
    }
  }
  v.push_back({0, 1});
  // Left, top to bottom; notches dig rightward.
  {
    std::vector<Notch> notches = side_notches();
    for (auto it = notches.rbegin(); it != notches.rend(); ++it) {
      v.push_back({0, it->b});
      v.push_back({it->d, it->b});
      v.push_back({it->d, it->a});
      v.push_back({0, it->a});
    }
  }
  return validate_polygon(v, "sandwich:" + std::to_string(seed));
}

Outcome criterion_sandwich() {
  Outcome out;
  const int count = 20;
  std::vector<std::string> problems(count);
  std::vector<double> margins(count);
  parallel_for(count, [&](std::size_t i) {
    double r1 = 0.0;
    const Polygon a = sandwich_shape(i + 1, &r1);
    const double bound = (0.5 - r1) / 2.0;
    const FitResult fit = fit_square_hausdorff(a, 1e-5);
    margins[i] = bound + 1e-5 - fit.delta;
    if (fit.delta > bound + 1e-5) {
      problems[i] = a.name() + " delta " + fmt(fit.delta) + " > " + fmt(bound);
    }
  });
  double min_margin = 1e300;
  for (int i = 0; i < count; ++i) {
    if (!problems[i].empty()) out.fail(problems[i]);
    min_margin = std::min(min_margin, margins[i]);
  }
  out.detail += "min margin " + fmt(min_margin);
  return out;
}

}  // namespace

int main() {
  struct Criterion {
    const char* name;
    std::function<Outcome()> body;
  };
  const std::vector<Criterion> criteria = {
      {"extremal families saturate the main bound", criterion_extremal_saturation},
      {"rectangle overlap matches the closed form", criterion_overlap_closed_form},
      {"staircase corpus passes every check", criterion_corpus_validity},
      {"pattern search agrees with the grid oracle", criterion_oracle_equivalence},
      {"isometry and scaling invariance", criterion_invariance},
      {"asymmetry ratio trend on thin rectangles", criterion_asymmetry_trend},
      {"sandwiched shapes stay within half the gap", criterion_sandwich},
  };

  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome out;
    try {
      out = criteria[i].body();
    } catch (const std::exception& e) {
      out.ok = false;
      out.detail = std::string("exception: ") + e.what();
    }
    if (!out.ok) ++failures;
    std::printf("[%s] criterion %zu: %s (%s)\n", out.ok ? "PASS" : "FAIL",
                i + 1, criteria[i].name, out.detail.c_str());
    std::fflush(stdout);
  }
  return failures;
}
