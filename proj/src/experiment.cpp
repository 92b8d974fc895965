#include "snoise/experiment.hpp"

#include <cmath>
#include <cstdio>
#include <map>
#include <set>

#include "snoise/diagnostics.hpp"
#include "snoise/errors.hpp"
#include "snoise/random.hpp"

namespace snoise {

namespace {

double num_field(const nlohmann::json& j, const char* key, const std::string& ctx) {
  if (!j.contains(key) || !j.at(key).is_number())
    throw ConfigError(ctx + ": missing numeric field \"" + key + "\"");
  return j.at(key).get<double>();
}

std::size_t count_field(const nlohmann::json& j, const char* key, const std::string& ctx) {
  if (!j.contains(key) || !j.at(key).is_number_integer() || j.at(key).get<long long>() < 1)
    throw ConfigError(ctx + ": \"" + std::string(key) + "\" must be an integer >= 1");
  return j.at(key).get<std::size_t>();
}

double tol_field(const nlohmann::json& j, double fallback) {
  if (!j.contains("tol")) return fallback;
  if (!j.at("tol").is_number()) throw ConfigError("\"tol\" must be a number");
  double tol = j.at("tol").get<double>();
  if (!(tol > 0.0) || !std::isfinite(tol)) throw ConfigError("\"tol\" must be positive");
  return tol;
}

void reject_unknown(const nlohmann::json& j, const std::set<std::string>& allowed,
                    const std::string& ctx) {
  for (auto it = j.begin(); it != j.end(); ++it)
    if (!allowed.count(it.key()))
      throw ConfigError(ctx + ": unknown key \"" + it.key() + "\"");
}

struct Grid {
  double lo, hi;
  int points;
  std::vector<double> values() const {
    std::vector<double> v(points);
    for (int i = 0; i < points; ++i)
      v[i] = lo * std::pow(hi / lo, double(i) / double(points - 1));
    return v;
  }
};

// log-spaced evaluation grid; the caller supplies command-specific defaults
Grid parse_grid(const nlohmann::json& body, double lo, double hi, int points) {
  if (body.contains("grid")) {
    const auto& g = body.at("grid");
    if (!g.is_object()) throw ConfigError("grid: expected an object");
    reject_unknown(g, {"min", "max", "points"}, "grid");
    if (g.contains("min")) lo = num_field(g, "min", "grid");
    if (g.contains("max")) hi = num_field(g, "max", "grid");
    if (g.contains("points")) points = int(count_field(g, "points", "grid"));
  }
  if (!(lo > 0.0) || !(hi > lo)) throw ConfigError("grid: need 0 < min < max");
  if (points < 2 || points > 100000) throw ConfigError("grid: need 2 <= points <= 100000");
  return {lo, hi, points};
}

// jump descriptors accept either a bare law object or a nested transform
LaplaceTransform law_or_transform(const nlohmann::json& j) {
  if (j.is_object() && j.contains("kind"))
    return LaplaceTransform::of_law(NamedLaw::from_json(j));
  return transform_from_json(j);
}

ExperimentResult transform_table(const LaplaceTransform& lt, const Grid& grid) {
  ExperimentResult r;
  r.columns = {"s", "phi", "log_phi", "local_index"};
  for (double s : grid.values())
    r.rows.push_back({s, lt.phi(s), lt.log_phi(s), lt.local_index(s)});
  return r;
}

ExperimentResult run_sample(const ExperimentSpec& spec) {
  ShotNoiseModel model = model_from_json(spec.body.at("model"));
  std::string op = spec.body.value("operation", std::string("stationary"));
  std::size_t n = count_field(spec.body, "n", "sample");
  double tol = tol_field(spec.body, 1e-4);
  RandomStream rng(spec.seed, 0);
  std::vector<double> xs;
  if (op == "stationary")
    xs = sample_stationary(model, n, tol, rng);
  else if (op == "series")
    xs = shot_noise_transform_samples(model, n, tol, rng);
  else
    throw ConfigError("sample: operation must be \"stationary\" or \"series\"");
  ExperimentResult r;
  r.columns = {"index", "value"};
  r.rows.reserve(n);
  for (std::size_t i = 0; i < xs.size(); ++i) r.rows.push_back({double(i), xs[i]});
  return r;
}

ExperimentResult run_transform(const ExperimentSpec& spec) {
  return transform_table(transform_from_json(spec.body.at("transform")),
                         parse_grid(spec.body, 0.01, 100.0, 40));
}

ExperimentResult run_identify_bdlp(const ExperimentSpec& spec) {
  LaplaceTransform phi = transform_from_json(spec.body.at("transform"));
  double violation = 0.0;
  LaplaceTransform psi = bdlp_from_sd(phi, &violation);
  if (violation > 1e-7)
    std::fprintf(stderr,
                 "note: log psi reaches +%.3g on the validation grid; the input "
                 "transform may not belong to a selfdecomposable law\n",
                 violation);
  return transform_table(psi, parse_grid(spec.body, 0.01, 100.0, 40));
}

ExperimentResult run_identify_jumps(const ExperimentSpec& spec) {
  double rho = num_field(spec.body, "rho", "identify-jumps");
  if (!(rho > 0.0)) throw ConfigError("identify-jumps: rho must be positive");
  LaplaceTransform phi = transform_from_json(spec.body.at("transform"));
  return transform_table(jump_lt_from_sn(phi, rho), parse_grid(spec.body, 0.01, 100.0, 40));
}

ExperimentResult run_invert(const ExperimentSpec& spec) {
  LaplaceTransform phi = transform_from_json(spec.body.at("transform"));
  Grid grid = parse_grid(spec.body, 0.05, 20.0, 40);
  ExperimentResult r;
  r.columns = {"x", "cdf"};
  for (double x : grid.values()) r.rows.push_back({x, invert_lt_cdf(phi, x)});
  return r;
}

ExperimentResult run_diagnose(const ExperimentSpec& spec) {
  const auto& body = spec.body;
  DiagnosisReport report;
  if (body.contains("law")) {
    report = classify(NamedLaw::from_json(body.at("law")));
  } else if (body.contains("transform")) {
    report = classify(transform_from_json(body.at("transform")));
  } else {
    ShotNoiseModel model = model_from_json(body.at("model"));
    std::size_t n = count_field(body, "n", "diagnose");
    double tol = tol_field(body, 1e-4);
    RandomStream rng(spec.seed, 0);
    std::vector<double> xs =
        model.response.kind() == ResponseFunction::Kind::Exponential
            ? sample_stationary(model, n, tol, rng)
            : shot_noise_transform_samples(model, n, tol, rng);
    RandomStream boot(spec.seed, 1);
    report = classify(xs, &boot);
  }
  ExperimentResult r;
  r.object = report.to_json();
  return r;
}

}  // namespace

ResponseFunction response_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("kind") || !j.at("kind").is_string())
    throw ConfigError("response descriptor: expected {\"kind\": string, ...}");
  const std::string kind = j.at("kind").get<std::string>();
  if (kind == "Exponential") {
    reject_unknown(j, {"kind", "omega"}, "response Exponential");
    return ResponseFunction::exponential(num_field(j, "omega", "response Exponential"));
  }
  if (kind == "Power") {
    reject_unknown(j, {"kind", "alpha"}, "response Power");
    return ResponseFunction::power(num_field(j, "alpha", "response Power"));
  }
  if (kind == "Indicator") {
    reject_unknown(j, {"kind", "a", "b"}, "response Indicator");
    return ResponseFunction::indicator(num_field(j, "a", "response Indicator"),
                                       num_field(j, "b", "response Indicator"));
  }
  if (kind == "Tabulated") {
    reject_unknown(j, {"kind", "points"}, "response Tabulated");
    if (!j.contains("points") || !j.at("points").is_array())
      throw ConfigError("response Tabulated: \"points\" must be an array of [s, h] pairs");
    std::vector<std::pair<double, double>> pts;
    for (const auto& p : j.at("points")) {
      if (!p.is_array() || p.size() != 2 || !p[0].is_number() || !p[1].is_number())
        throw ConfigError("response Tabulated: each point must be a [s, h] number pair");
      pts.emplace_back(p[0].get<double>(), p[1].get<double>());
    }
    return ResponseFunction::tabulated(std::move(pts));
  }
  throw ConfigError("unknown response kind \"" + kind + "\"");
}

ShotNoiseModel model_from_json(const nlohmann::json& j) {
  if (!j.is_object()) throw ConfigError("model descriptor: expected an object");
  reject_unknown(j, {"lambda", "jumps", "response", "x0"}, "model");
  if (!j.contains("jumps")) throw ConfigError("model: missing \"jumps\"");
  if (!j.contains("response")) throw ConfigError("model: missing \"response\"");
  double lambda = num_field(j, "lambda", "model");
  double x0 = j.contains("x0") ? num_field(j, "x0", "model") : 0.0;
  return ShotNoiseModel(lambda, NamedLaw::from_json(j.at("jumps")),
                        response_from_json(j.at("response")), x0);
}

LaplaceTransform transform_from_json(const nlohmann::json& j) {
  if (!j.is_object() || j.size() != 1)
    throw ConfigError(
        "transform descriptor: expected exactly one of "
        "{law, sn, jumps_of, bdlp_of, sd_of, subordinate}");
  const auto it = j.begin();
  const std::string& key = it.key();
  const nlohmann::json& v = it.value();
  if (key == "law") return LaplaceTransform::of_law(NamedLaw::from_json(v));
  if (key == "sn") {
    if (!v.is_object()) throw ConfigError("sn: expected {\"jumps\": ..., \"rho\": r}");
    reject_unknown(v, {"jumps", "rho"}, "sn");
    if (!v.contains("jumps")) throw ConfigError("sn: missing \"jumps\"");
    double rho = num_field(v, "rho", "sn");
    if (!(rho > 0.0)) throw ConfigError("sn: rho must be positive");
    return sn_lt_from_jumps(law_or_transform(v.at("jumps")), rho);
  }
  if (key == "jumps_of") {
    if (!v.is_object()) throw ConfigError("jumps_of: expected {\"phi\": ..., \"rho\": r}");
    reject_unknown(v, {"phi", "rho"}, "jumps_of");
    if (!v.contains("phi")) throw ConfigError("jumps_of: missing \"phi\"");
    double rho = num_field(v, "rho", "jumps_of");
    if (!(rho > 0.0)) throw ConfigError("jumps_of: rho must be positive");
    return jump_lt_from_sn(law_or_transform(v.at("phi")), rho);
  }
  if (key == "bdlp_of") return bdlp_from_sd(law_or_transform(v));
  if (key == "sd_of") return sd_from_bdlp(law_or_transform(v));
  if (key == "subordinate") {
    if (!v.is_object()) throw ConfigError("subordinate: expected {\"phi1\": ..., \"phi2\": ...}");
    reject_unknown(v, {"phi1", "phi2"}, "subordinate");
    if (!v.contains("phi1") || !v.contains("phi2"))
      throw ConfigError("subordinate: need both \"phi1\" and \"phi2\"");
    return subordinate(law_or_transform(v.at("phi1")), law_or_transform(v.at("phi2")));
  }
  throw ConfigError("transform descriptor: unknown key \"" + key + "\"");
}

ExperimentSpec ExperimentSpec::parse(const nlohmann::json& file, const std::string& command) {
  // required / optional keys per command; seed, format, out are always allowed
  static const std::map<std::string, std::pair<std::set<std::string>, std::set<std::string>>>
      kSchema = {
          {"sample", {{"model", "n"}, {"operation", "tol"}}},
          {"transform", {{"transform"}, {"grid"}}},
          {"identify-bdlp", {{"transform"}, {"grid"}}},
          {"identify-jumps", {{"transform", "rho"}, {"grid"}}},
          {"invert", {{"transform"}, {"grid"}}},
          {"diagnose", {{}, {"law", "transform", "model", "n", "tol"}}},
      };
  auto schema = kSchema.find(command);
  if (schema == kSchema.end()) throw ConfigError("unknown command \"" + command + "\"");
  if (!file.is_object()) throw ConfigError("spec file: expected a JSON object");
  const auto& [required, optional] = schema->second;
  for (auto it = file.begin(); it != file.end(); ++it) {
    const std::string& k = it.key();
    if (k == "seed" || k == "format" || k == "out") continue;
    if (!required.count(k) && !optional.count(k))
      throw ConfigError(command + ": unknown spec key \"" + k + "\"");
  }
  for (const auto& k : required)
    if (!file.contains(k)) throw ConfigError(command + ": missing required key \"" + k + "\"");

  ExperimentSpec s;
  s.command = command;
  s.body = file;
  if (file.contains("seed")) {
    const auto& sd = file.at("seed");
    if (!sd.is_number_integer() || sd.get<long long>() < 0)
      throw ConfigError("\"seed\" must be a nonnegative integer");
    s.seed = sd.get<std::uint64_t>();
  }
  s.format = file.value("format", command == "diagnose" ? std::string("json")
                                                        : std::string("csv"));
  if (s.format != "csv" && s.format != "json")
    throw ConfigError("\"format\" must be \"csv\" or \"json\"");
  if (file.contains("out")) {
    if (!file.at("out").is_string()) throw ConfigError("\"out\" must be a string path");
    s.out = file.at("out").get<std::string>();
  }

  if (command == "diagnose") {
    int inputs = int(file.contains("law")) + int(file.contains("transform")) +
                 int(file.contains("model"));
    if (inputs != 1)
      throw ConfigError("diagnose: give exactly one of \"law\", \"transform\", \"model\"");
    if (file.contains("model")) count_field(file, "n", "diagnose");
  }
  return s;
}

ExperimentResult run_experiment(const ExperimentSpec& spec) {
  if (spec.command == "sample") return run_sample(spec);
  if (spec.command == "transform") return run_transform(spec);
  if (spec.command == "identify-bdlp") return run_identify_bdlp(spec);
  if (spec.command == "identify-jumps") return run_identify_jumps(spec);
  if (spec.command == "invert") return run_invert(spec);
  if (spec.command == "diagnose") return run_diagnose(spec);
  throw ConfigError("unknown command \"" + spec.command + "\"");
}

std::string ExperimentResult::render_csv() const {
  if (is_object())
    throw ConfigError("this command produces a JSON report; use the json format");
  std::string out;
  for (std::size_t c = 0; c < columns.size(); ++c) {
    if (c) out += ',';
    out += columns[c];
  }
  out += '\n';
  char buf[40];
  for (const auto& row : rows) {
    for (std::size_t c = 0; c < row.size(); ++c) {
      if (c) out += ',';
      std::snprintf(buf, sizeof buf, "%.17g", row[c]);
      out += buf;
    }
    out += '\n';
  }
  return out;
}

std::string ExperimentResult::render_json() const {
  if (is_object()) return object.dump(2) + "\n";
  // sample sets serialize as a bare array of values; tables as row objects
  if (columns.size() == 2 && columns[0] == "index" && columns[1] == "value") {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& row : rows) arr.push_back(row[1]);
    return arr.dump(2) + "\n";
  }
  nlohmann::ordered_json arr = nlohmann::ordered_json::array();
  for (const auto& row : rows) {
    nlohmann::ordered_json obj;
    for (std::size_t c = 0; c < columns.size(); ++c) obj[columns[c]] = row[c];
    arr.push_back(obj);
  }
  return arr.dump(2) + "\n";
}

std::string ExperimentResult::render(const std::string& format) const {
  return format == "json" ? render_json() : render_csv();
}

}  // namespace snoise
