#include <cstdlib>
#include <iostream>
#include <string>

#include "CLI11.hpp"

#include "isol1/cli.hpp"

namespace {

void add_common_flags(CLI::App* sub, isol1::RunConfig& cfg) {
  sub->add_option("--input", cfg.input,
                  "Polygon JSON, corpus JSONL, or generator spec "
                  "staircase:SEED:COUNT");
  sub->add_option("--output", cfg.output, "Output path (default: stdout)");
  sub->add_option("--tol", cfg.tol, "Fit tolerance (default 1e-5)");
  sub->add_option("--resolution", cfg.resolution,
                  "Distance-evaluation resolution (default: 1e-6*sqrt(area))");
  sub->add_option("--seed", cfg.seed,
                  "Default seed for generator specs that omit one");
  sub->add_option("--family", cfg.family,
                  "Family name (rect, corner) or inline spec like corner:0.1");
  sub->add_option("--params", cfg.params, "Param range START:STOP:COUNT");
  sub->add_option("--format", cfg.format, "Output format: json, csv, or svg");
  sub->add_option("--threads", cfg.threads,
                  "Worker threads for corpus runs (default: all cores)");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Taxicab-plane isoperimetry: analyze polygons, verify sharp stability "
      "bounds, sweep extremal families"};
  app.require_subcommand(1);

  isol1::RunConfig cfg;
  cfg.format.clear();  // let each subcommand pick its default
  if (const char* env = std::getenv("ISO_L1_EVAL_BUDGET")) {
    char* end = nullptr;
    const long long v = std::strtoll(env, &end, 10);
    if (end == env || *end != '\0' || v <= 0) {
      std::cerr << "error: ISO_L1_EVAL_BUDGET must be a positive integer\n";
      return isol1::kExitInputError;
    }
    cfg.eval_budget = v;
  }

  CLI::App* analyze =
      app.add_subcommand("analyze", "Report on a single polygon");
  CLI::App* verify =
      app.add_subcommand("verify", "Check every shape of a corpus");
  CLI::App* sweep =
      app.add_subcommand("sweep", "Trace an extremal family over a range");
  CLI::App* gen = app.add_subcommand("gen", "Write family polygons as JSONL");
  for (CLI::App* sub : {analyze, verify, sweep, gen}) {
    add_common_flags(sub, cfg);
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : isol1::kExitInputError;
  }

  if (analyze->parsed()) return isol1::run_analyze(cfg, std::cout, std::cerr);
  if (verify->parsed()) return isol1::run_verify(cfg, std::cout, std::cerr);
  if (sweep->parsed()) return isol1::run_sweep(cfg, std::cout, std::cerr);
  return isol1::run_gen(cfg, std::cout, std::cerr);
}
