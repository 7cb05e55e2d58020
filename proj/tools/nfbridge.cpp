// Command-line front end: runs verification suites against scenario
// configurations and writes machine-readable reports.

#include <CLI11.hpp>
#include <cstdlib>
#include <iostream>

#include "nfbridge/suites.hpp"

namespace {

int run_command(const std::string& config_path, const std::string& suite,
                const std::string& mode, std::uint64_t seed, double h,
                const std::string& json_path, const std::string& csv_path,
                bool verbose, bool suite_set, bool mode_set, bool seed_set,
                bool h_set) {
  nfb::Scenario scenario;
  if (!config_path.empty()) scenario = nfb::scenario_from_file(config_path);
  if (suite_set) scenario.suite = suite;
  if (mode_set) scenario.mode = mode;
  if (seed_set) scenario.seed = seed;
  if (h_set) {
    scenario.grid.h = h;
    const auto n = static_cast<std::size_t>(std::lround(1.0 / h)) + 1;
    scenario.grid.nt = scenario.grid.ny = std::max<std::size_t>(n, 3);
  }
  if (const char* env_mode = std::getenv("NFBRIDGE_MODE"))
    scenario.mode = env_mode;
  nfb::validate_scenario(scenario);

  const nfb::SuiteReport report = nfb::run_suite(scenario.suite, scenario);
  for (const auto& c : report.checks) {
    std::cout << (c.pass ? "PASS " : "FAIL ") << c.id << " [" << c.paper_eq
              << "]";
    if (verbose && !c.detail.empty()) std::cout << "  " << c.detail;
    std::cout << "\n";
  }
  std::cout << report.suite << ": " << report.passed() << "/"
            << report.checks.size() << " checks passed (mode=" << report.mode
            << ", seed=" << report.seed << ")\n";
  if (verbose) {
    std::cerr << "scenario: " << report.scenario_echo << "\n";
    std::cerr << "wall: " << report.wall_ms << " ms, version "
              << report.tool_version << "\n";
  }
  if (!json_path.empty()) nfb::emit_json(report, json_path);
  if (!csv_path.empty()) nfb::emit_csv(report, csv_path);
  return report.all_pass() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Dirac-Maxwell correspondence verifier"};
  app.set_help_flag("--help", "print help");  // frees --h for the spacing flag
  app.require_subcommand(1);

  auto* run = app.add_subcommand("run", "run a verification suite");
  run->set_help_flag("--help", "print help");
  std::string suite = "all", mode = "exact", config_path, json_path, csv_path;
  std::uint64_t seed = 1;
  double h = 1.0 / 32;
  bool verbose = false;
  auto* suite_opt = run->add_option("--suite", suite, "suite name (or 'all')");
  auto* mode_opt = run->add_option("--mode", mode, "exact or float");
  auto* seed_opt = run->add_option("--seed", seed, "random seed");
  auto* h_opt = run->add_option("--h", h, "grid spacing for FD suites");
  run->add_option("--config", config_path, "scenario JSON file");
  run->add_option("--json", json_path, "write the JSON report here");
  run->add_option("--csv", csv_path, "write the CSV report here");
  run->add_flag("--verbose", verbose, "per-check details and timing");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 2;
  }

  try {
    return run_command(config_path, suite, mode, seed, h, json_path, csv_path,
                       verbose, suite_opt->count() > 0, mode_opt->count() > 0,
                       seed_opt->count() > 0, h_opt->count() > 0);
  } catch (const nfb::ConfigError& e) {
    std::cerr << "configuration error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
