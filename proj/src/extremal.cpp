#include "isol1/extremal.hpp"

#include <cmath>
#include <cstdio>
#include <utility>

#include "isol1/errors.hpp"
#include "isol1/prng.hpp"

namespace isol1 {

namespace {

std::string format_param(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

void require_scale(double scale) {
  if (!(scale > 0.0)) {
    throw Error(ErrorCode::NonPositiveScale, "scale must be positive");
  }
}

// Strictly ascending jittered grid positions in (0, 1): entry i stays inside
// ((i - 0.95) / n, (i - 0.05) / n), so ordering and separation survive any
// jitter in [0, 1].
std::vector<double> jittered_grid(std::uint64_t seed, std::uint64_t stream, int n,
                                  double jitter) {
  std::vector<double> out(static_cast<std::size_t>(n));
  for (int i = 1; i <= n; ++i) {
    const double u = unit_uniform(seed, stream + static_cast<std::uint64_t>(i));
    out[static_cast<std::size_t>(i - 1)] =
        (static_cast<double>(i) - 0.5 + jitter * 0.9 * (u - 0.5)) / static_cast<double>(n);
  }
  return out;
}

}  // namespace

Polygon gen_corner_deleted(double delta, double scale) {
  if (!(delta > 0.0 && delta < 0.5)) {
    throw Error(ErrorCode::ParamOutOfRange,
                "corner-deleted parameter must lie in (0, 1/2), got " + format_param(delta));
  }
  require_scale(scale);
  const double d2 = 2.0 * delta;
  std::vector<Point> v = {{0.0, 0.0}, {1.0, 0.0},      {1.0, 1.0},
                          {d2, 1.0},  {d2, 1.0 - d2},  {0.0, 1.0 - d2}};
  for (Point& p : v) {
    p.x *= scale;
    p.y *= scale;
  }
  return validate_polygon(v, "corner:" + format_param(delta));
}

Polygon gen_rectangle(double alpha, double scale) {
  if (!(alpha >= 0.0 && alpha < 0.5)) {
    throw Error(ErrorCode::ParamOutOfRange,
                "rectangle parameter must lie in [0, 1/2), got " + format_param(alpha));
  }
  require_scale(scale);
  const double w = 1.0 - 2.0 * alpha;
  const double h = 1.0 + 2.0 * alpha;
  std::vector<Point> v = {{0.0, 0.0}, {w, 0.0}, {w, h}, {0.0, h}};
  for (Point& p : v) {
    p.x *= scale;
    p.y *= scale;
  }
  return validate_polygon(v, "rect:" + format_param(alpha));
}

Polygon generate(const FamilySpec& spec) {
  Polygon p = spec.family == Family::CornerDeleted ? gen_corner_deleted(spec.param, spec.scale)
                                                   : gen_rectangle(spec.param, spec.scale);
  for (const Transform& t : spec.placement) p = transform(p, t);
  return p;
}

ClosedForm closed_form(const FamilySpec& spec) {
  require_scale(spec.scale);
  const double p = spec.param;
  if (spec.family == Family::CornerDeleted) {
    if (!(p > 0.0 && p < 0.5)) {
      throw Error(ErrorCode::ParamOutOfRange, "corner-deleted parameter must lie in (0, 1/2)");
    }
  } else if (!(p >= 0.0 && p < 0.5)) {
    throw Error(ErrorCode::ParamOutOfRange, "rectangle parameter must lie in [0, 1/2)");
  }
  const double s = spec.scale;
  ClosedForm cf;
  cf.area = (1.0 - 4.0 * p * p) * s * s;
  cf.perimeter = 4.0 * s;
  cf.epsilon = p == 0.0 ? 0.0 : 64.0 * p * p / (1.0 - 4.0 * p * p);
  cf.delta_expected = p * s;
  if (spec.family == Family::Rectangle) {
    cf.mu_expected = p == 0.0 ? 1.0 : (1.0 - 2.0 * p) / std::sqrt(1.0 - 4.0 * p * p);
  }
  return cf;
}

Polygon gen_staircase(std::uint64_t seed, int n_steps, double jitter) {
  if (n_steps < 1) {
    throw Error(ErrorCode::ParamOutOfRange, "n_steps must be at least 1");
  }
  if (!(jitter >= 0.0 && jitter <= 1.0)) {
    throw Error(ErrorCode::ParamOutOfRange, "jitter must lie in [0, 1]");
  }
  const double notch_w = 0.5;
  const double notch_h = 0.5;
  const int n = n_steps;
  const std::string name =
      "staircase:" + std::to_string(seed) + ":" + std::to_string(n_steps);

  for (int attempt = 0; attempt < 8; ++attempt) {
    const std::uint64_t stream = static_cast<std::uint64_t>(attempt) * 4096u;
    const std::vector<double> ax = jittered_grid(seed, stream, n, jitter);
    const std::vector<double> ay = jittered_grid(seed, stream + 2048u, n, jitter);

    // x positions ascend left to right; depths below the top edge shrink in
    // the same direction, producing a monotone staircase.
    std::vector<double> xs(static_cast<std::size_t>(n));
    std::vector<double> ys(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
      xs[static_cast<std::size_t>(i)] = notch_w * ax[static_cast<std::size_t>(i)];
      ys[static_cast<std::size_t>(i)] =
          1.0 - notch_h * ay[static_cast<std::size_t>(n - 1 - i)];
    }

    std::vector<Point> v;
    v.reserve(static_cast<std::size_t>(2 * n + 4));
    v.push_back({0.0, 0.0});
    v.push_back({1.0, 0.0});
    v.push_back({1.0, 1.0});
    v.push_back({xs[static_cast<std::size_t>(n - 1)], 1.0});
    for (int i = n - 1; i >= 1; --i) {
      v.push_back({xs[static_cast<std::size_t>(i)], ys[static_cast<std::size_t>(i)]});
      v.push_back({xs[static_cast<std::size_t>(i - 1)], ys[static_cast<std::size_t>(i)]});
    }
    v.push_back({xs[0], ys[0]});
    v.push_back({0.0, ys[0]});

    try {
      return validate_polygon(v, name);
    } catch (const Error&) {
      continue;  // retry with a shifted stream
    }
  }
  throw Error(ErrorCode::GenerationFailed,
              "staircase generation failed for seed " + std::to_string(seed));
}

FamilySpec parse_family_spec(const std::string& text) {
  const auto colon = text.find(':');
  if (colon == std::string::npos || colon + 1 >= text.size()) {
    throw Error(ErrorCode::ParseError, "family spec must look like corner:0.1 or rect:0.25");
  }
  const std::string head = text.substr(0, colon);
  const std::string tail = text.substr(colon + 1);
  FamilySpec spec;
  if (head == "corner") {
    spec.family = Family::CornerDeleted;
  } else if (head == "rect") {
    spec.family = Family::Rectangle;
  } else {
    throw Error(ErrorCode::ParseError, "unknown family '" + head + "'");
  }
  try {
    std::size_t used = 0;
    spec.param = std::stod(tail, &used);
    if (used != tail.size()) throw std::invalid_argument("trailing characters");
  } catch (const std::exception&) {
    throw Error(ErrorCode::ParseError, "bad family parameter '" + tail + "'");
  }
  return spec;
}

}  // namespace isol1
