#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

#include "snoise/laplace.hpp"
#include "snoise/shot_noise.hpp"

namespace snoise {

// A validated experiment request: one command plus its JSON payload and the
// run parameters. Same spec + same seed reproduces the output byte for byte.
struct ExperimentSpec {
  std::string command;   // sample | transform | identify-bdlp | identify-jumps
                         // | diagnose | invert
  nlohmann::json body;   // command payload (model / transform / law / grid)
  std::uint64_t seed = 1;
  std::string format = "csv";  // csv | json
  std::string out = "-";       // "-" is stdout

  // Parses and validates a spec file for the given command. Unknown keys,
  // missing required keys, or out-of-range values throw ConfigError.
  static ExperimentSpec parse(const nlohmann::json& file, const std::string& command);
};

// Tabular or object-shaped experiment output.
struct ExperimentResult {
  std::vector<std::string> columns;
  std::vector<std::vector<double>> rows;
  nlohmann::json object;  // set instead of rows for report-shaped output

  bool is_object() const { return !object.is_null(); }
  // CSV uses 17 significant digits so equal runs hash equal and values
  // round-trip through text exactly.
  std::string render_csv() const;
  std::string render_json() const;
  std::string render(const std::string& format) const;
};

ExperimentResult run_experiment(const ExperimentSpec& spec);

// Descriptor parsers shared by the CLI and the verify scenarios.
//
// response: {"kind": "Exponential", "omega": w} | {"kind": "Power", "alpha": a}
//         | {"kind": "Indicator", "a": a, "b": b}
//         | {"kind": "Tabulated", "points": [[s, h], ...]}
// model:    {"lambda": l, "jumps": <law>, "response": <response>, "x0": x}
// transform (recursive):
//   {"law": <law>}                                  closed-form catalog LT
//   {"sn": {"jumps": <transform>, "rho": r}}        stationary shot-noise LT
//   {"jumps_of": {"phi": <transform>, "rho": r}}    jump LT recovered from an SN LT
//   {"bdlp_of": <transform>}                        driving-process LT of an SD law
//   {"sd_of": <transform>}                          SD law LT from its driving process
//   {"subordinate": {"phi1": <transform>, "phi2": <transform>}}
ResponseFunction response_from_json(const nlohmann::json& j);
ShotNoiseModel model_from_json(const nlohmann::json& j);
LaplaceTransform transform_from_json(const nlohmann::json& j);

}  // namespace snoise
