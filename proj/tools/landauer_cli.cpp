// Command-line front end: simulate a scenario file, print the Landauer
// report for a temperature, or evaluate the working-memory capacity.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "landauer/cognition.hpp"
#include "landauer/error.hpp"
#include "landauer/scenario.hpp"

namespace {

constexpr int kExitUsage = 1;
constexpr int kExitNumeric = 2;

int usage_error(const std::string& message) {
  std::cerr << "error: " << message << '\n';
  return kExitUsage;
}

int cmd_simulate(const std::string& scenario_path, std::string out_dir) {
  std::ifstream in(scenario_path, std::ios::binary);
  if (!in) return usage_error("--scenario: cannot open '" + scenario_path + "'");
  std::stringstream buf;
  buf << in.rdbuf();

  landauer::Scenario scenario;
  try {
    scenario = landauer::parse_scenario(buf.str());
  } catch (const landauer::ParseError& e) {
    return usage_error(scenario_path + ": " + e.what());
  }
  if (out_dir.empty()) out_dir = scenario.output_dir;
  if (out_dir.empty()) {
    return usage_error("--out: no output directory given and scenario sets none");
  }

  const auto result = landauer::run(scenario, out_dir);
  for (const auto& p : result.outputs) std::cout << "wrote " << p.string() << '\n';
  std::cout << result.report;
  return 0;
}

int cmd_report(double temperature) {
  if (!(temperature > 0.0)) {
    return usage_error("--temperature: must be > 0 K");
  }
  std::cout << landauer::report_block(landauer::ThermalContext(temperature));
  return 0;
}

int cmd_capacity(double k, double dk, double d, double dt) {
  const double rate = landauer::capacity(k, dk, d, dt);
  const double bound = landauer::capacity_lower_bound(k, dk, dt);
  std::cout << "capacity_nat_per_time=" << landauer::format_sig(rate) << '\n'
            << "capacity_bit_per_time="
            << landauer::format_sig(landauer::nats_to_bits(rate)) << '\n'
            << "lower_bound_nat_per_time=" << landauer::format_sig(bound) << '\n';
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Learning dynamics, Landauer bounds and Szilard engine simulation"};
  app.require_subcommand(1);

  int threads = 0;
  app.add_option("--threads", threads, "OpenMP threads for the engine ensemble (0 = runtime default)")
      ->check(CLI::NonNegativeNumber);

  auto* simulate = app.add_subcommand("simulate", "Run a scenario file");
  std::string scenario_path;
  std::string out_dir;
  simulate->add_option("--scenario", scenario_path, "Scenario file")->required();
  simulate->add_option("--out", out_dir, "Output directory (overrides 'output' in the file)");

  auto* report = app.add_subcommand(
      "report", "Print the Landauer report block (temperature defaults to 300 K)");
  double temperature = landauer::kDefaultTemperature;
  report->add_option("--temperature", temperature, "Absolute temperature in kelvin")
      ->capture_default_str();

  auto* cap = app.add_subcommand("capacity", "Evaluate the working-memory capacity");
  double k = 0.0, dk = 0.0, d = 1.0, dt = 1.0;
  cap->add_option("--k", k, "Knowledge eigenvalue K(S) > 0")->required();
  cap->add_option("--dk", dk, "Change of K")->required();
  cap->add_option("--d", d, "Matching affinity in (0, 1]")->capture_default_str();
  cap->add_option("--dt", dt, "Transition duration > 0")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

#ifdef _OPENMP
  if (threads > 0) omp_set_num_threads(threads);
#endif

  try {
    if (*simulate) return cmd_simulate(scenario_path, out_dir);
    if (*report) return cmd_report(temperature);
    if (*cap) return cmd_capacity(k, dk, d, dt);
  } catch (const landauer::ParseError& e) {
    return usage_error(e.what());
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitNumeric;
  }
  return kExitUsage;
}
