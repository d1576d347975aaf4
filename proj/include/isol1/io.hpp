#pragma once

#include <string>
#include <vector>

#include "json.hpp"

#include "isol1/geometry.hpp"
#include "isol1/isoperimetry.hpp"

namespace isol1 {

using json = nlohmann::ordered_json;

/// {"name": ..., "vertices": [[x, y], ...]}
json polygon_to_json(const Polygon& a);

/// Parses and validates a polygon object; the fallback name is used when the
/// object carries none. Structural problems raise ParseError; geometric ones
/// keep their own codes.
Polygon polygon_from_json(const json& j, const std::string& fallback_name = "");

/// Reads one polygon from a JSON file.
Polygon read_polygon_file(const std::string& path);

/// Reads a corpus: one polygon object per line, blank lines ignored.
/// Errors are annotated with path and line number.
std::vector<Polygon> read_corpus_jsonl(const std::string& path);

void write_corpus_jsonl(const std::string& path,
                        const std::vector<Polygon>& shapes);

json check_to_json(const CheckRecord& c);

json report_to_json(const IsoReport& r);

/// Fixed-width decimal rendering with 12 significant digits, used for CSV
/// output so files are byte-stable.
std::string format_sig(double x);

std::string read_text_file(const std::string& path);

void write_text_file(const std::string& path, const std::string& content);

}  // namespace isol1
