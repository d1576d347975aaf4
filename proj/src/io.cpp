#include "isol1/io.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

#include "isol1/errors.hpp"

namespace isol1 {

json polygon_to_json(const Polygon& a) {
  json j;
  j["name"] = a.name();
  json verts = json::array();
  for (const Point& p : a.vertices()) {
    verts.push_back(json::array({p.x, p.y}));
  }
  j["vertices"] = verts;
  return j;
}

Polygon polygon_from_json(const json& j, const std::string& fallback_name) {
  if (!j.is_object()) {
    throw Error(ErrorCode::ParseError, "polygon must be a JSON object");
  }
  if (!j.contains("vertices") || !j["vertices"].is_array()) {
    throw Error(ErrorCode::ParseError,
                "polygon object needs a \"vertices\" array");
  }
  std::vector<Point> pts;
  pts.reserve(j["vertices"].size());
  for (const json& v : j["vertices"]) {
    if (!v.is_array() || v.size() != 2 || !v[0].is_number() ||
        !v[1].is_number()) {
      throw Error(ErrorCode::ParseError,
                  "each vertex must be a [x, y] pair of numbers");
    }
    pts.push_back({v[0].get<double>(), v[1].get<double>()});
  }
  std::string name = fallback_name;
  if (j.contains("name")) {
    if (!j["name"].is_string()) {
      throw Error(ErrorCode::ParseError, "\"name\" must be a string");
    }
    name = j["name"].get<std::string>();
  }
  return validate_polygon(pts, name);
}

Polygon read_polygon_file(const std::string& path) {
  const std::string text = read_text_file(path);
  json j;
  try {
    j = json::parse(text);
  } catch (const std::exception& e) {
    throw Error(ErrorCode::ParseError, path + ": " + e.what());
  }
  return polygon_from_json(j, path);
}

std::vector<Polygon> read_corpus_jsonl(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw Error(ErrorCode::ParseError, "cannot open " + path);
  }
  std::vector<Polygon> shapes;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos) continue;
    const std::string where = path + ":" + std::to_string(line_no);
    json j;
    try {
      j = json::parse(line);
    } catch (const std::exception& e) {
      throw Error(ErrorCode::ParseError, where + ": " + e.what());
    }
    try {
      shapes.push_back(
          polygon_from_json(j, "shape_" + std::to_string(line_no)));
    } catch (const Error& e) {
      throw Error(e.code(), where + ": " + e.what());
    }
  }
  return shapes;
}

void write_corpus_jsonl(const std::string& path,
                        const std::vector<Polygon>& shapes) {
  std::ostringstream out;
  for (const Polygon& a : shapes) {
    out << polygon_to_json(a).dump() << "\n";
  }
  write_text_file(path, out.str());
}

json check_to_json(const CheckRecord& c) {
  json j;
  j["name"] = c.name;
  j["lhs"] = c.lhs;
  j["rhs"] = c.rhs;
  j["slack"] = c.slack_budget;
  j["passed"] = c.passed;
  j["skipped"] = c.skipped;
  return j;
}

json report_to_json(const IsoReport& r) {
  json j;
  j["shape"] = r.shape;
  j["area"] = r.area;
  j["perimeter"] = r.perimeter;
  j["epsilon"] = r.epsilon;
  j["ell"] = r.ell;
  j["alpha"] = r.alpha;
  j["delta"] = r.delta;
  j["delta_gap"] = r.delta_gap;
  j["mu"] = r.mu;
  j["mu_gap"] = r.mu_gap;
  if (r.q_ratio) {
    j["q_ratio"] = *r.q_ratio;
  } else {
    j["q_ratio"] = nullptr;
  }
  j["asymmetry"] = r.asymmetry;
  if (r.asymmetry_ratio) {
    j["asymmetry_ratio"] = *r.asymmetry_ratio;
  } else {
    j["asymmetry_ratio"] = nullptr;
  }
  j["all_passed"] = r.all_passed();
  json checks = json::array();
  for (const CheckRecord& c : r.checks) {
    checks.push_back(check_to_json(c));
  }
  j["checks"] = checks;
  return j;
}

std::string format_sig(double x) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.12g", x);
  return buf;
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw Error(ErrorCode::ParseError, "cannot open " + path);
  }
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_text_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) {
    throw Error(ErrorCode::InvalidArgument, "cannot write " + path);
  }
  out << content;
}

}  // namespace isol1
