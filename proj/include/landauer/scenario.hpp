#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "landauer/dynamics.hpp"
#include "landauer/szilard.hpp"

namespace landauer {

inline constexpr double kDefaultTemperature = 300.0;

struct DynamicsSection {
  std::size_t length = 0;
  double dt = 1e-3;
  double t_end = 0.0;
  double gamma = 0.0;
  std::vector<Subsumer> subsumers;
  std::vector<InputChannel> inputs;

  CognitiveStructure structure() const {
    return CognitiveStructure(subsumers, gamma);
  }
  IntegrationOptions options() const { return {dt, t_end}; }

  friend bool operator==(const DynamicsSection&, const DynamicsSection&) = default;
};

struct SzilardSection {
  EngineConfig engine;

  friend bool operator==(const SzilardSection& a, const SzilardSection& b) {
    return a.engine.temperature == b.engine.temperature &&
           a.engine.epsilon == b.engine.epsilon &&
           a.engine.cycles == b.engine.cycles && a.engine.seed == b.engine.seed;
  }
};

struct Scenario {
  std::optional<DynamicsSection> dynamics;
  std::optional<SzilardSection> szilard;
  std::string output_dir;  // empty when not given in the file

  double temperature() const {
    return szilard ? szilard->engine.temperature : kDefaultTemperature;
  }

  friend bool operator==(const Scenario&, const Scenario&) = default;
};

/// Parses the INI-style scenario grammar:
///
///   # comment
///   output = results        (optional, before any section)
///   [dynamics]
///   length = 2
///   dt = 0.001
///   t_end = 0.6931
///   gamma = 0
///   subsumer = 01 1.0       (repeatable: shape strength)
///   input = 10 1.0          (repeatable: shape rate [start end])
///   [szilard]
///   temperature = 300
///   epsilon = 0.1
///   cycles = 100000
///   seed = 42
///
/// Throws ParseError carrying the offending line.
Scenario parse_scenario(std::string_view text);

/// Inverse of parse_scenario; doubles are written with 17 significant digits
/// so that parse_scenario(to_text(s)) == s.
std::string to_text(const Scenario& scenario);

struct RunReport {
  std::string scenario_echo;
  std::vector<std::filesystem::path> outputs;
  std::string report;  // contents of report.txt
};

/// Runs every present section and writes trajectory.csv, ledger.csv and
/// report.txt into `out_dir`. Files written before a failure are removed.
RunReport run(const Scenario& scenario, const std::filesystem::path& out_dir);

}  // namespace landauer
