#pragma once

#include <string>
#include <vector>

namespace isol1 {

struct Series {
  std::string label;
  std::string color;
  std::vector<double> ys;
};

/// Renders a self-contained SVG line chart (axes, grid, legend). Every
/// series must have one value per entry of xs; non-finite values break the
/// polyline at that point.
std::string render_line_chart(const std::string& title,
                              const std::string& x_label,
                              const std::string& y_label,
                              const std::vector<double>& xs,
                              const std::vector<Series>& series,
                              int width = 860, int height = 520);

}  // namespace isol1
