#pragma once

#include <string>
#include <vector>

namespace snoise {

// One measured statistic inside a scenario. The relation behind `pass` is
// check-specific (usually value <= bound); the printed numbers let a reader
// judge the margin.
struct ScenarioCheck {
  std::string name;
  double value;
  double bound;
  bool pass;
};

struct ScenarioResult {
  std::string name;
  bool pass;
  std::vector<ScenarioCheck> checks;
};

// A named, fully pinned acceptance run: fixed seeds, fixed sizes, fixed
// bounds. Scenarios are deterministic end to end.
struct Scenario {
  std::string name;
  std::string anchor;  // one-line statement of the property being verified
  ScenarioResult (*run)();
};

const std::vector<Scenario>& scenario_registry();

// Runs a registry entry by name; throws ConfigError for unknown names.
ScenarioResult run_scenario(const std::string& name);

}  // namespace snoise
