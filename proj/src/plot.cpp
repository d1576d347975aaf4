#include "isol1/plot.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <sstream>

#include "isol1/errors.hpp"

namespace isol1 {
namespace {

std::string num(double v, const char* fmt = "%.2f") {
  char buf[64];
  std::snprintf(buf, sizeof(buf), fmt, v);
  return buf;
}

std::string escape_xml(const std::string& s) {
  std::string out;
  out.reserve(s.size());
  for (char c : s) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      default: out += c;
    }
  }
  return out;
}

}  // namespace

std::string render_line_chart(const std::string& title,
                              const std::string& x_label,
                              const std::string& y_label,
                              const std::vector<double>& xs,
                              const std::vector<Series>& series,
                              int width, int height) {
  if (xs.empty() || series.empty()) {
    throw Error(ErrorCode::InvalidArgument, "chart needs data");
  }
  for (const Series& s : series) {
    if (s.ys.size() != xs.size()) {
      throw Error(ErrorCode::InvalidArgument,
                  "series \"" + s.label + "\" length does not match x values");
    }
  }

  double xmin = xs.front(), xmax = xs.front();
  for (double x : xs) {
    xmin = std::min(xmin, x);
    xmax = std::max(xmax, x);
  }
  double ymin = std::numeric_limits<double>::infinity();
  double ymax = -std::numeric_limits<double>::infinity();
  for (const Series& s : series) {
    for (double y : s.ys) {
      if (!std::isfinite(y)) continue;
      ymin = std::min(ymin, y);
      ymax = std::max(ymax, y);
    }
  }
  if (!(ymin <= ymax)) {
    ymin = 0.0;
    ymax = 1.0;
  }
  if (xmax - xmin < 1e-300) xmax = xmin + 1.0;
  const double ypad = std::max(0.05 * (ymax - ymin), 1e-6 * std::max(1.0, std::abs(ymax)));
  ymin -= ypad;
  ymax += ypad;

  const double left = 70, right = 30, top = 50, bottom = 55;
  const double pw = width - left - right;
  const double ph = height - top - bottom;
  auto px = [&](double x) { return left + (x - xmin) / (xmax - xmin) * pw; };
  auto py = [&](double y) { return top + (ymax - y) / (ymax - ymin) * ph; };

  std::ostringstream svg;
  svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width
      << "\" height=\"" << height << "\" viewBox=\"0 0 " << width << " "
      << height << "\">\n";
  svg << "<rect width=\"" << width << "\" height=\"" << height
      << "\" fill=\"white\"/>\n";
  svg << "<text x=\"" << width / 2.0 << "\" y=\"24\" text-anchor=\"middle\" "
         "font-family=\"sans-serif\" font-size=\"16\">"
      << escape_xml(title) << "</text>\n";

  const int ticks = 5;
  svg << "<g font-family=\"sans-serif\" font-size=\"11\" fill=\"#333\">\n";
  for (int i = 0; i <= ticks; ++i) {
    const double fx = xmin + (xmax - xmin) * i / ticks;
    const double gx = px(fx);
    svg << "<line x1=\"" << num(gx) << "\" y1=\"" << num(top) << "\" x2=\""
        << num(gx) << "\" y2=\"" << num(top + ph)
        << "\" stroke=\"#ddd\" stroke-width=\"1\"/>\n";
    svg << "<text x=\"" << num(gx) << "\" y=\"" << num(top + ph + 18)
        << "\" text-anchor=\"middle\">" << num(fx, "%.4g") << "</text>\n";

    const double fy = ymin + (ymax - ymin) * i / ticks;
    const double gy = py(fy);
    svg << "<line x1=\"" << num(left) << "\" y1=\"" << num(gy) << "\" x2=\""
        << num(left + pw) << "\" y2=\"" << num(gy)
        << "\" stroke=\"#ddd\" stroke-width=\"1\"/>\n";
    svg << "<text x=\"" << num(left - 8) << "\" y=\"" << num(gy + 4)
        << "\" text-anchor=\"end\">" << num(fy, "%.4g") << "</text>\n";
  }
  svg << "</g>\n";

  svg << "<rect x=\"" << num(left) << "\" y=\"" << num(top) << "\" width=\""
      << num(pw) << "\" height=\"" << num(ph)
      << "\" fill=\"none\" stroke=\"#444\" stroke-width=\"1\"/>\n";
  svg << "<text x=\"" << num(left + pw / 2) << "\" y=\"" << num(height - 12)
      << "\" text-anchor=\"middle\" font-family=\"sans-serif\" "
         "font-size=\"13\">"
      << escape_xml(x_label) << "</text>\n";
  svg << "<text x=\"18\" y=\"" << num(top + ph / 2)
      << "\" text-anchor=\"middle\" font-family=\"sans-serif\" "
         "font-size=\"13\" transform=\"rotate(-90 18 "
      << num(top + ph / 2) << ")\">" << escape_xml(y_label) << "</text>\n";

  for (const Series& s : series) {
    std::ostringstream pts;
    bool open = false;
    for (std::size_t i = 0; i < xs.size(); ++i) {
      if (!std::isfinite(s.ys[i])) {
        if (open) {
          svg << "<polyline fill=\"none\" stroke=\"" << s.color
              << "\" stroke-width=\"1.8\" points=\"" << pts.str() << "\"/>\n";
          pts.str("");
          open = false;
        }
        continue;
      }
      pts << num(px(xs[i])) << "," << num(py(s.ys[i])) << " ";
      open = true;
    }
    if (open) {
      svg << "<polyline fill=\"none\" stroke=\"" << s.color
          << "\" stroke-width=\"1.8\" points=\"" << pts.str() << "\"/>\n";
    }
  }

  double ly = top + 16;
  for (const Series& s : series) {
    const double lx = left + pw - 170;
    svg << "<line x1=\"" << num(lx) << "\" y1=\"" << num(ly - 4) << "\" x2=\""
        << num(lx + 24) << "\" y2=\"" << num(ly - 4) << "\" stroke=\""
        << s.color << "\" stroke-width=\"2\"/>\n";
    svg << "<text x=\"" << num(lx + 30) << "\" y=\"" << num(ly)
        << "\" font-family=\"sans-serif\" font-size=\"12\">"
        << escape_xml(s.label) << "</text>\n";
    ly += 18;
  }

  svg << "</svg>\n";
  return svg.str();
}

}  // namespace isol1
