#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "isol1/geometry.hpp"

namespace isol1 {

enum class Family { CornerDeleted, Rectangle };

/// Description of an extremal-family instance: the family, its parameter,
/// an optional similarity scale and an optional placement (a composition of
/// taxicab isometries applied after generation).
struct FamilySpec {
  Family family = Family::CornerDeleted;
  double param = 0.0;
  double scale = 1.0;
  std::vector<Transform> placement;
};

/// Exact values for an extremal family instance. mu_expected is only
/// available for the rectangle family.
struct ClosedForm {
  double area = 0.0;
  double perimeter = 0.0;
  double epsilon = 0.0;
  double delta_expected = 0.0;
  std::optional<double> mu_expected;
};

/// Unit square with a 2*delta x 2*delta square deleted at the top-left
/// corner, scaled by scale. Requires 0 < delta < 1/2.
Polygon gen_corner_deleted(double delta, double scale = 1.0);

/// Rectangle with sides (1 - 2*alpha) x (1 + 2*alpha), scaled by scale.
/// Requires 0 <= alpha < 1/2.
Polygon gen_rectangle(double alpha, double scale = 1.0);

/// Generates the polygon described by a FamilySpec (family, scale and
/// placement applied in that order).
Polygon generate(const FamilySpec& spec);

/// Closed-form area, perimeter, isoperimetric deficit, optimal Hausdorff
/// distance and (rectangle only) optimal overlap fraction for the instance.
ClosedForm closed_form(const FamilySpec& spec);

/// Rectilinear polygon in the unit box: the unit square with a monotone
/// staircase of n_steps steps notched into its top-left quarter. Step
/// positions interpolate between a regular grid (jitter = 0) and seeded
/// perturbations (jitter = 1) that preserve strict monotonicity, so every
/// output is a valid polygon whose taxicab perimeter equals that of its
/// bounding rectangle. Deterministic per (seed, n_steps, jitter).
Polygon gen_staircase(std::uint64_t seed, int n_steps, double jitter);

/// Parses "corner:PARAM" or "rect:PARAM" into a FamilySpec.
FamilySpec parse_family_spec(const std::string& text);

}  // namespace isol1
