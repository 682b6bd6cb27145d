#pragma once

// Scenario files: parsing against the published schema, dispatch to the
// verification actions, and deterministic JSON/text reports.

#include "trialg/search.hpp"
#include "trialg/serialize.hpp"

#include <cstdint>

namespace trialg {

inline constexpr const char* kArtifactName = "trialg";
inline constexpr const char* kArtifactVersion = "1.0.0";

struct GridPoint {
  ScalarRing ring = ScalarRing::integers();
  AlgebraDescriptor coefficient = AlgebraDescriptor::scalar();
  std::size_t n = 2;
};

struct ScenarioOptions {
  std::uint64_t seed = 1;
  std::uint64_t max_enum = 100000000;
  std::uint64_t max_nodes = 50000000;
  std::size_t max_unknowns = 4000;
  bool require_orthogonal = true;
  CodomainScope scope = CodomainScope::generated;
  bool also_full_scope = false;
  bool force_solver = false;
  bool tamper = false;
  std::optional<std::uint64_t> expect_solutions;
  std::optional<std::uint64_t> min_solutions;
  /// Wall-clock hint in seconds; checked by the acceptance suite, never by reports.
  double time_budget_seconds = 0;
};

struct Scenario {
  std::string name;
  std::string description;
  std::vector<GridPoint> points;  // the base point, or the grid when one is given
  bool has_grid = false;
  std::string action;
  json map;  // recipe; null when the action needs none or uses its default
  ScenarioOptions options;
};

Scenario parse_scenario(const json& j);
/// Canonical JSON form; parse_scenario(scenario_to_json(s)) reproduces s.
json scenario_to_json(const Scenario& s);

const std::vector<std::string>& action_names();

struct RunResult {
  bool pass = false;
  json report;   // deterministic body
  json timings;  // wall-clock seconds, kept apart from the report
};

RunResult run_scenario(const Scenario& s);

/// Plain-text summary of a report produced by run_scenario.
std::string report_to_text(const json& report);

struct Builtin {
  std::string name;
  std::string description;
  double budget_seconds;
  json scenario;
};

const std::vector<Builtin>& builtins();
const Builtin* find_builtin(const std::string& name);

/// Phi in {Z, Z/2, Z/4, Z/5} x R in {Phi, M_2(Phi), Free(2,2)} x n in {2, 3}.
std::vector<GridPoint> acceptance_grid();

/// JSON Schema (2020-12) for scenario files.
json scenario_schema();

}  // namespace trialg
