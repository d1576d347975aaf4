#include "isol1/cli.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdint>
#include <ctime>
#include <functional>
#include <limits>
#include <optional>
#include <ostream>
#include <sstream>
#include <thread>
#include <vector>

#include "isol1/errors.hpp"
#include "isol1/extremal.hpp"
#include "isol1/fitting.hpp"
#include "isol1/io.hpp"
#include "isol1/isoperimetry.hpp"
#include "isol1/plot.hpp"

namespace isol1 {
namespace {

std::string utc_timestamp() {
  std::time_t t = std::time(nullptr);
  std::tm g{};
  gmtime_r(&t, &g);
  char buf[32];
  std::strftime(buf, sizeof(buf), "%Y-%m-%dT%H:%M:%SZ", &g);
  return buf;
}

double parse_double_strict(const std::string& s, const std::string& what) {
  try {
    std::size_t pos = 0;
    const double v = std::stod(s, &pos);
    if (pos != s.size()) throw std::invalid_argument("trailing characters");
    return v;
  } catch (const std::exception&) {
    throw Error(ErrorCode::ParseError, "cannot parse " + what + ": " + s);
  }
}

long long parse_int_strict(const std::string& s, const std::string& what) {
  try {
    std::size_t pos = 0;
    const long long v = std::stoll(s, &pos);
    if (pos != s.size()) throw std::invalid_argument("trailing characters");
    return v;
  } catch (const std::exception&) {
    throw Error(ErrorCode::ParseError, "cannot parse " + what + ": " + s);
  }
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::size_t begin = 0;
  while (true) {
    const std::size_t end = s.find(sep, begin);
    out.push_back(s.substr(begin, end - begin));
    if (end == std::string::npos) break;
    begin = end + 1;
  }
  return out;
}

void validate_common(const RunConfig& cfg) {
  if (!(cfg.tol > 0.0)) {
    throw Error(ErrorCode::NonPositiveTolerance, "--tol must be positive");
  }
  if (cfg.resolution < 0.0) {
    throw Error(ErrorCode::NonPositiveResolution,
                "--resolution must be positive");
  }
  if (cfg.eval_budget <= 0) {
    throw Error(ErrorCode::InvalidArgument,
                "evaluation budget must be positive");
  }
}

FitOptions fit_options(const RunConfig& cfg) {
  FitOptions opt;
  opt.eval_budget = cfg.eval_budget;
  opt.final_resolution = cfg.resolution;
  return opt;
}

void emit(const RunConfig& cfg, const std::string& text, std::ostream& out) {
  if (cfg.output.empty()) {
    out << text;
  } else {
    write_text_file(cfg.output, text);
  }
}

std::string resolved_format(const RunConfig& cfg, const char* def) {
  return cfg.format.empty() ? def : cfg.format;
}

bool is_staircase_spec(const std::string& s) {
  return s.rfind("staircase:", 0) == 0;
}

std::vector<Polygon> corpus_from_staircase_spec(const std::string& spec,
                                                long long default_seed) {
  const std::vector<std::string> parts = split(spec, ':');
  long long seed = default_seed;
  long long count = 0;
  if (parts.size() == 2) {
    count = parse_int_strict(parts[1], "staircase count");
  } else if (parts.size() == 3) {
    seed = parse_int_strict(parts[1], "staircase seed");
    count = parse_int_strict(parts[2], "staircase count");
  } else {
    throw Error(ErrorCode::ParseError,
                "generator spec must be staircase:SEED:COUNT");
  }
  if (count < 1 || count > 1000000) {
    throw Error(ErrorCode::ParamOutOfRange,
                "staircase count must be in [1, 1000000]");
  }
  return staircase_corpus(seed, static_cast<int>(count));
}

std::vector<IsoReport> analyze_corpus(const std::vector<Polygon>& shapes,
                                      double tol, const FitOptions& opt,
                                      int threads) {
  std::vector<IsoReport> reports(shapes.size());
  std::vector<std::exception_ptr> failures(shapes.size());
  std::atomic<std::size_t> next{0};
  std::size_t workers =
      threads > 0 ? static_cast<std::size_t>(threads)
                  : std::max(1u, std::thread::hardware_concurrency());
  workers = std::min(workers, std::max<std::size_t>(shapes.size(), 1));

  auto run = [&] {
    for (;;) {
      const std::size_t i = next.fetch_add(1);
      if (i >= shapes.size()) return;
      try {
        reports[i] = full_report(shapes[i], tol, opt);
      } catch (...) {
        failures[i] = std::current_exception();
      }
    }
  };
  std::vector<std::thread> pool;
  pool.reserve(workers > 0 ? workers - 1 : 0);
  for (std::size_t t = 1; t < workers; ++t) pool.emplace_back(run);
  run();
  for (std::thread& t : pool) t.join();
  for (const std::exception_ptr& e : failures) {
    if (e) std::rethrow_exception(e);
  }
  return reports;
}

Family family_by_name(const std::string& name) {
  if (name == "rect") return Family::Rectangle;
  if (name == "corner") return Family::CornerDeleted;
  throw Error(ErrorCode::InvalidArgument,
              "unknown family \"" + name + "\" (expected rect or corner)");
}

Polygon make_family_member(Family f, double param) {
  return f == Family::Rectangle ? gen_rectangle(param)
                                : gen_corner_deleted(param);
}

double prop2_bound_of(const IsoReport& r) {
  for (const CheckRecord& c : r.checks) {
    if (c.name == "prop_area") return c.lhs;
  }
  return std::numeric_limits<double>::quiet_NaN();
}

int guarded(std::ostream& err, const std::function<int()>& body) {
  try {
    return body();
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitInputError;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitInputError;
  }
}

}  // namespace

std::vector<double> RangeSpec::values() const {
  std::vector<double> out;
  out.reserve(count);
  for (int i = 0; i < count; ++i) {
    out.push_back(start + (stop - start) * i / (count - 1));
  }
  return out;
}

RangeSpec parse_range_spec(const std::string& text) {
  const std::vector<std::string> parts = split(text, ':');
  if (parts.size() != 3) {
    throw Error(ErrorCode::RangeError,
                "range spec must be START:STOP:COUNT, got \"" + text + "\"");
  }
  RangeSpec r;
  r.start = parse_double_strict(parts[0], "range start");
  r.stop = parse_double_strict(parts[1], "range stop");
  const long long n = parse_int_strict(parts[2], "range count");
  if (!(r.start > 0.0) || !(r.start < r.stop) || !(r.stop < 0.5)) {
    throw Error(ErrorCode::RangeError,
                "range spec requires 0 < start < stop < 0.5");
  }
  if (n < 2 || n > 100000) {
    throw Error(ErrorCode::RangeError, "range count must be in [2, 100000]");
  }
  r.count = static_cast<int>(n);
  return r;
}

std::vector<Polygon> staircase_corpus(long long seed, int count) {
  if (count < 1) {
    throw Error(ErrorCode::ParamOutOfRange, "corpus count must be positive");
  }
  std::vector<Polygon> shapes;
  shapes.reserve(count);
  for (int i = 0; i < count; ++i) {
    const long long s = seed + i;
    const int n_steps = 1 + static_cast<int>(((s % 8) + 8) % 8);
    shapes.push_back(gen_staircase(static_cast<std::uint64_t>(s), n_steps, 0.8));
  }
  return shapes;
}

int run_analyze(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  return guarded(err, [&]() -> int {
    validate_common(cfg);
    if (cfg.input.empty()) {
      throw Error(ErrorCode::InvalidArgument, "analyze requires --input");
    }
    if (resolved_format(cfg, "json") != "json") {
      throw Error(ErrorCode::InvalidArgument, "analyze emits json only");
    }
    const Polygon a = read_polygon_file(cfg.input);
    const IsoReport r = full_report(a, cfg.tol, fit_options(cfg));
    json doc;
    doc["generated_at"] = utc_timestamp();
    const json body = report_to_json(r);
    for (const auto& [k, v] : body.items()) doc[k] = v;
    emit(cfg, doc.dump(2) + "\n", out);
    return r.all_passed() ? kExitAllPassed : kExitCheckFailed;
  });
}

int run_verify(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  return guarded(err, [&]() -> int {
    validate_common(cfg);
    if (cfg.input.empty()) {
      throw Error(ErrorCode::InvalidArgument,
                  "verify requires --input (JSONL path or staircase:SEED:COUNT)");
    }
    if (resolved_format(cfg, "json") != "json") {
      throw Error(ErrorCode::InvalidArgument, "verify emits json only");
    }
    const std::vector<Polygon> shapes =
        is_staircase_spec(cfg.input)
            ? corpus_from_staircase_spec(cfg.input, cfg.seed)
            : read_corpus_jsonl(cfg.input);
    const std::vector<IsoReport> reports =
        analyze_corpus(shapes, cfg.tol, fit_options(cfg), cfg.threads);

    int failures = 0;
    std::optional<double> max_q;
    std::optional<double> max_ratio;
    for (const IsoReport& r : reports) {
      if (!r.all_passed()) ++failures;
      if (r.q_ratio && (!max_q || *r.q_ratio > *max_q)) max_q = *r.q_ratio;
      if (r.asymmetry_ratio && (!max_ratio || *r.asymmetry_ratio > *max_ratio)) {
        max_ratio = *r.asymmetry_ratio;
      }
    }

    json doc;
    doc["generated_at"] = utc_timestamp();
    doc["count"] = reports.size();
    doc["failures"] = failures;
    if (max_q) {
      doc["max_Q"] = *max_q;
    } else {
      doc["max_Q"] = nullptr;
    }
    if (max_ratio) {
      doc["max_asymmetry_ratio"] = *max_ratio;
    } else {
      doc["max_asymmetry_ratio"] = nullptr;
    }
    json arr = json::array();
    for (const IsoReport& r : reports) arr.push_back(report_to_json(r));
    doc["shapes"] = arr;
    emit(cfg, doc.dump(2) + "\n", out);
    return failures > 0 ? kExitCheckFailed : kExitAllPassed;
  });
}

int run_sweep(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  return guarded(err, [&]() -> int {
    validate_common(cfg);
    if (cfg.family.empty() || cfg.params.empty()) {
      throw Error(ErrorCode::InvalidArgument,
                  "sweep requires --family and --params START:STOP:COUNT");
    }
    const std::string format = resolved_format(cfg, "csv");
    if (format != "csv" && format != "svg") {
      throw Error(ErrorCode::InvalidArgument, "sweep emits csv or svg");
    }
    if (format == "svg" && cfg.output.empty()) {
      throw Error(ErrorCode::InvalidArgument,
                  "--format svg requires --output");
    }
    const Family fam = family_by_name(cfg.family);
    const RangeSpec range = parse_range_spec(cfg.params);
    const std::vector<double> params = range.values();

    std::vector<Polygon> shapes;
    shapes.reserve(params.size());
    for (double p : params) shapes.push_back(make_family_member(fam, p));
    const std::vector<IsoReport> reports =
        analyze_corpus(shapes, cfg.tol, fit_options(cfg), cfg.threads);

    std::ostringstream csv;
    csv << "param,area,perimeter,epsilon,delta,q_ratio,mu,asymmetry,"
           "prop2_bound\n";
    bool all_passed = true;
    std::vector<double> q_series, ratio_series;
    for (std::size_t i = 0; i < reports.size(); ++i) {
      const IsoReport& r = reports[i];
      all_passed = all_passed && r.all_passed();
      const double q =
          r.q_ratio ? *r.q_ratio : std::numeric_limits<double>::quiet_NaN();
      const double ratio = r.asymmetry_ratio
                               ? *r.asymmetry_ratio
                               : std::numeric_limits<double>::quiet_NaN();
      q_series.push_back(q);
      ratio_series.push_back(ratio);
      csv << format_sig(params[i]) << "," << format_sig(r.area) << ","
          << format_sig(r.perimeter) << "," << format_sig(r.epsilon) << ","
          << format_sig(r.delta) << "," << format_sig(q) << ","
          << format_sig(r.mu) << "," << format_sig(r.asymmetry) << ","
          << format_sig(prop2_bound_of(r)) << "\n";
    }

    std::string csv_path = cfg.output;
    std::string svg_path;
    if (format == "svg") {
      const std::size_t slash = cfg.output.find_last_of('/');
      const std::size_t dot = cfg.output.find_last_of('.');
      const bool has_ext =
          dot != std::string::npos &&
          (slash == std::string::npos || dot > slash);
      const std::string stem = has_ext ? cfg.output.substr(0, dot) : cfg.output;
      const std::string ext = has_ext ? cfg.output.substr(dot) : "";
      if (ext == ".svg") {
        svg_path = cfg.output;
        csv_path = stem + ".csv";
      } else {
        csv_path = cfg.output;
        svg_path = stem + ".svg";
      }
    }

    if (csv_path.empty()) {
      out << csv.str();
    } else {
      write_text_file(csv_path, csv.str());
    }
    if (!svg_path.empty()) {
      const std::string chart = render_line_chart(
          cfg.family + " family sharpness sweep", "param", "ratio", params,
          {{"Q = 64*delta^2/(eps*area)", "#1f77b4", q_series},
           {"asymmetry / (sqrt(eps)/2)", "#d62728", ratio_series}});
      write_text_file(svg_path, chart);
    }
    return all_passed ? kExitAllPassed : kExitCheckFailed;
  });
}

int run_gen(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  return guarded(err, [&]() -> int {
    if (cfg.family.empty()) {
      throw Error(ErrorCode::InvalidArgument, "gen requires --family");
    }
    std::vector<Polygon> shapes;
    if (is_staircase_spec(cfg.family)) {
      shapes = corpus_from_staircase_spec(cfg.family, cfg.seed);
    } else if (cfg.family.find(':') != std::string::npos) {
      shapes.push_back(generate(parse_family_spec(cfg.family)));
    } else {
      const Family fam = family_by_name(cfg.family);
      if (cfg.params.empty()) {
        throw Error(ErrorCode::InvalidArgument,
                    "gen with a bare family name requires --params");
      }
      for (double p : parse_range_spec(cfg.params).values()) {
        shapes.push_back(make_family_member(fam, p));
      }
    }
    std::ostringstream lines;
    for (const Polygon& a : shapes) {
      lines << polygon_to_json(a).dump() << "\n";
    }
    emit(cfg, lines.str(), out);
    return kExitAllPassed;
  });
}

}  // namespace isol1
