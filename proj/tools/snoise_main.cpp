#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "snoise/errors.hpp"
#include "snoise/experiment.hpp"
#include "snoise/scenarios.hpp"

namespace {

// exit codes: 0 ok, 1 failed verify scenario, 2 config/schema error,
// 3 numeric failure, 4 divergent model
constexpr int kExitScenarioFail = 1;
constexpr int kExitConfig = 2;
constexpr int kExitNumeric = 3;
constexpr int kExitDivergent = 4;

struct CommonOpts {
  std::string spec_path;
  std::optional<std::uint64_t> seed;
  std::optional<std::string> out;
  std::optional<std::string> format;
};

nlohmann::json load_spec(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw snoise::ConfigError("cannot open spec file \"" + path + "\"");
  try {
    return nlohmann::json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw snoise::ConfigError("spec file \"" + path + "\": " + e.what());
  }
}

void write_output(const std::string& out, const std::string& text) {
  if (out == "-") {
    std::fwrite(text.data(), 1, text.size(), stdout);
    return;
  }
  std::ofstream f(out, std::ios::binary);
  if (!f) throw snoise::ConfigError("cannot open output file \"" + out + "\"");
  f.write(text.data(), std::streamsize(text.size()));
  if (!f) throw snoise::ConfigError("failed writing output file \"" + out + "\"");
}

int run_command(const std::string& command, const CommonOpts& opts) {
  auto spec = snoise::ExperimentSpec::parse(load_spec(opts.spec_path), command);
  if (opts.seed) spec.seed = *opts.seed;
  if (opts.format) spec.format = *opts.format;
  if (opts.out) spec.out = *opts.out;
  auto result = snoise::run_experiment(spec);
  write_output(spec.out, result.render(spec.format));
  return 0;
}

void print_scenario(const snoise::ScenarioResult& res) {
  std::printf("%s %s\n", res.pass ? "PASS" : "FAIL", res.name.c_str());
  for (const auto& c : res.checks)
    std::printf("  %-4s %s value=%.6g bound=%.6g\n", c.pass ? "pass" : "FAIL", c.name.c_str(),
                c.value, c.bound);
}

int run_verify(const std::string& name, bool list) {
  const auto& registry = snoise::scenario_registry();
  if (list) {
    for (const auto& sc : registry) std::printf("%-26s %s\n", sc.name.c_str(), sc.anchor.c_str());
    return 0;
  }
  if (name.empty())
    throw snoise::ConfigError("verify: give a scenario name or --list");
  if (name == "all") {
    int failed = 0;
    for (const auto& sc : registry) {
      auto res = sc.run();
      print_scenario(res);
      failed += !res.pass;
    }
    std::printf("%d/%zu scenarios passed\n", int(registry.size()) - failed, registry.size());
    return failed ? kExitScenarioFail : 0;
  }
  auto res = snoise::run_scenario(name);
  print_scenario(res);
  return res.pass ? 0 : kExitScenarioFail;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"shot-noise distribution laboratory"};
  app.require_subcommand(1);

  std::map<std::string, CommonOpts> opts;
  const std::pair<const char*, const char*> commands[] = {
      {"sample", "draw stationary or series samples from a shot-noise model"},
      {"transform", "tabulate a Laplace transform: s, phi, log_phi, local_index"},
      {"identify-bdlp", "tabulate the driving-process transform of a selfdecomposable law"},
      {"identify-jumps", "recover the jump-law transform behind a shot-noise transform"},
      {"diagnose", "classify a law, transform, or model as shot-noise / not-SD / inconclusive"},
      {"invert", "tabulate the CDF behind a Laplace transform by numeric inversion"},
  };
  for (const auto& [name, desc] : commands) {
    auto* sub = app.add_subcommand(name, desc);
    auto& o = opts[name];
    sub->add_option("--spec", o.spec_path, "JSON experiment spec")
        ->required()
        ->check(CLI::ExistingFile);
    sub->add_option("--seed", o.seed, "root seed override");
    sub->add_option("--out", o.out, "output path (default - for stdout)");
    sub->add_option("--format", o.format, "output format")
        ->check(CLI::IsMember({"csv", "json"}));
  }
  std::string verify_name;
  bool verify_list = false;
  auto* verify = app.add_subcommand("verify", "run a named acceptance scenario");
  verify->add_option("name", verify_name, "scenario name, or \"all\"");
  verify->add_flag("--list", verify_list, "list scenarios and what each one verifies");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : kExitConfig;
  }

  try {
    if (verify->parsed()) return run_verify(verify_name, verify_list);
    for (const auto& [name, desc] : commands)
      if (app.get_subcommand(name)->parsed()) return run_command(name, opts[name]);
    throw snoise::ConfigError("no command given");
  } catch (const snoise::DivergenceError& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kExitDivergent;
  } catch (const snoise::ConfigError& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kExitConfig;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kExitNumeric;
  }
}
