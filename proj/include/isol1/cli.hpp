#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "isol1/geometry.hpp"

namespace isol1 {

/// Exit codes shared by every subcommand. Math failures and usage errors
/// are never conflated.
inline constexpr int kExitAllPassed = 0;
inline constexpr int kExitInputError = 1;
inline constexpr int kExitCheckFailed = 2;

struct RunConfig {
  double tol = 1e-5;
  double resolution = 0.0;  // 0 = pick the per-shape default
  long long seed = 0;
  std::string input;
  std::string output;  // empty = stdout
  std::string family;
  std::string params;
  std::string format = "json";  // json | csv | svg
  long long eval_budget = 10'000'000;
  int threads = 0;  // 0 = hardware concurrency
};

/// "start:stop:count" with 0 < start < stop < 0.5 and count >= 2.
struct RangeSpec {
  double start = 0.0;
  double stop = 0.0;
  int count = 0;

  std::vector<double> values() const;
};

RangeSpec parse_range_spec(const std::string& text);

/// Deterministic corpus used by the verify generator spec
/// "staircase:seed:count": seeds seed..seed+count-1, step counts cycling
/// 1..8 with the seed, jitter 0.8.
std::vector<Polygon> staircase_corpus(long long seed, int count);

/// Analyze one polygon file; writes an IsoReport JSON document.
int run_analyze(const RunConfig& cfg, std::ostream& out, std::ostream& err);

/// Verify a corpus (JSONL path or generator spec); writes per-shape reports
/// plus an aggregate summary, in input order regardless of scheduling.
int run_verify(const RunConfig& cfg, std::ostream& out, std::ostream& err);

/// Sweep an extremal family over a param range; writes CSV and optionally an
/// SVG chart of the sharpness curves.
int run_sweep(const RunConfig& cfg, std::ostream& out, std::ostream& err);

/// Generate family polygons ("corner:0.1", "rect:0.25", "staircase:7:20", or
/// a family name plus --params range) as JSONL.
int run_gen(const RunConfig& cfg, std::ostream& out, std::ostream& err);

}  // namespace isol1
