// Command-line sweep harness.
//
//   cavitybec run <config> [--out <prefix>] [--threshold] [--quiet]
//
// Exit codes: 0 success, 2 a point failed to converge (or no threshold in
// range with --threshold), 3 the sweep entered an unstable region, 4
// malformed config, 1 usage or I/O errors.

#include <cmath>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "cavitybec/config.hpp"
#include "cavitybec/error.hpp"
#include "cavitybec/meanfield.hpp"
#include "cavitybec/sweep.hpp"

namespace {

constexpr int kExitMalformed = 4;

std::string default_prefix(const cavitybec::RunConfig& cfg, const std::string& config_path) {
  if (!cfg.output.empty()) return cfg.output;
  std::filesystem::path p(config_path);
  return (p.parent_path() / p.stem()).string();
}

int run_threshold(const cavitybec::RunConfig& cfg, bool quiet) {
  using namespace cavitybec;
  if (cfg.sweep.axis != SweepAxis::Y) {
    std::cerr << "error: --threshold needs a sweep over y\n";
    return kExitMalformed;
  }
  const double lo = std::min(cfg.sweep.start, cfg.sweep.stop);
  const double hi = std::max(cfg.sweep.start, cfg.sweep.stop);
  try {
    const double yc = detect_threshold(cfg.params_at(lo), lo, hi, cfg.solver);
    if (!quiet) std::cout << "threshold y = " << format_number(yc) << '\n';
    return 0;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
}

int run(const std::string& config_path, const std::string& out_override, bool threshold_only,
        bool quiet) {
  using namespace cavitybec;
  RunConfig cfg;
  try {
    cfg = load_config(config_path);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitMalformed;
  }
  if (threshold_only) return run_threshold(cfg, quiet);

  const SweepResult result = run_sweep(cfg);
  const std::string prefix = out_override.empty() ? default_prefix(cfg, config_path) : out_override;
  const std::string csv_path = prefix + ".csv";
  std::ofstream out(csv_path, std::ios::binary);
  if (!out) {
    std::cerr << "error: cannot write '" << csv_path << "'\n";
    return 1;
  }
  write_csv(out, cfg, result);
  out.close();

  if (!quiet) {
    int counts[4] = {0, 0, 0, 0};
    for (const auto& r : result.records) ++counts[static_cast<int>(r.status)];
    const char axis = cfg.sweep.axis == SweepAxis::Y ? 'y' : 'u';
    std::cout << "points: " << result.records.size() << " of " << cfg.sweep.steps
              << " (ok " << counts[0] << ", near-critical " << counts[1] << ", unstable "
              << counts[2] << ", no-converge " << counts[3] << ")\n";
    if (result.threshold)
      std::cout << "threshold: y = " << format_number(*result.threshold) << '\n';
    if (result.unstable_at)
      std::cout << "unstable: sweep stopped at " << axis << " = "
                << format_number(*result.unstable_at) << '\n';
    std::cout << "csv: " << csv_path << '\n';
  }
  return result.exit_code();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Mean-field, Bogoliubov and entanglement sweeps for a pumped condensate in a cavity"};
  app.require_subcommand(1);

  std::string config_path;
  std::string out_prefix;
  bool threshold_only = false;
  bool quiet = false;

  CLI::App* run_cmd = app.add_subcommand("run", "Run the sweep described by a config file");
  run_cmd->add_option("config", config_path, "Run configuration")->required();
  run_cmd->add_option("--out", out_prefix, "Output path prefix; writes <prefix>.csv");
  run_cmd->add_flag("--threshold", threshold_only, "Only locate the onset pump strength by bisection");
  run_cmd->add_flag("--quiet", quiet, "Suppress the summary");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  }
  return run(config_path, out_prefix, threshold_only, quiet);
}
