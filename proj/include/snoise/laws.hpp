#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "snoise/random.hpp"

namespace snoise {

// Catalog of named positive laws. A law is an immutable value; samplers take
// an explicit stream, so concurrent use just needs independent streams.
enum class LawKind {
  Exponential,        // rate beta
  Gamma,              // shape rho, rate beta
  PositiveStable,     // E exp(-sS) = exp(-s^rho), 0 < rho < 1
  PositiveLinnik,     // LT 1/(1 + beta s^rho), 0 < rho <= 1
  GeneralizedLinnik,  // LT (1 + beta s^rho1)^(-rho/rho1), 0 < rho1 <= 1
  Bessel,             // LT (1+s)^(-rho) exp(-rho s/(1+s))
  Burr,               // tail (beta1/(x^rho + beta1))^beta2, beta2 > rho
  Weibull,            // tail exp(-beta x^rho), 0 < rho <= 1
  HalfCauchy,         // density 2/(pi (1+x^2)) on x > 0
  LogCauchy,          // density 1/(pi x (1 + ln^2 x)); no Laplace transform
  Degenerate,         // point mass at c >= 0
  LogPareto,          // tail 1/ln x for x > e; moment-condition fixture only
};

class NamedLaw {
 public:
  static NamedLaw exponential(double beta);
  static NamedLaw gamma_law(double rho, double beta);
  static NamedLaw positive_stable(double rho);
  static NamedLaw positive_linnik(double rho, double beta);
  static NamedLaw generalized_linnik(double rho, double rho1, double beta);
  static NamedLaw bessel(double rho);
  static NamedLaw burr(double rho, double beta1, double beta2);
  static NamedLaw weibull(double rho, double beta);
  static NamedLaw half_cauchy();
  static NamedLaw log_cauchy();
  static NamedLaw degenerate(double c);
  static NamedLaw log_pareto();

  LawKind kind() const { return kind_; }
  const std::string& name() const;
  std::string describe() const;
  double param(const std::string& name) const;

  // Capability probes. lt/pdf throw UnsupportedError outside these sets.
  bool has_lt() const;   // all kinds except LogCauchy, LogPareto
  bool has_pdf() const;  // all kinds except Degenerate, LogPareto

  // cdf is defined for every kind. upper_tail(x) = 1 - cdf(x) but computed
  // tail-first where a stable form exists (deep quantiles stay accurate).
  double cdf(double x) const;
  double upper_tail(double x) const;
  double pdf(double x) const;
  double lt(double s) const;
  double sample(RandomStream& rng) const;

  // Moment/structure metadata used by existence checks and diagnostics.
  double mean() const;  // +infinity when the mean diverges
  bool log_moment_finite() const;              // E ln(1 + X) < inf
  bool fractional_moment_finite(double q) const;  // E X^q < inf, q > 0
  // nullopt = no claim either way (the classifier treats it as unknown).
  std::optional<bool> selfdecomposable() const;
  double support_upper() const;  // c for Degenerate, +infinity otherwise

  // Wire format: {"kind": string, "params": {name: number}}.
  nlohmann::json to_json() const;
  static NamedLaw from_json(const nlohmann::json& j);

 private:
  NamedLaw(LawKind kind, std::vector<std::pair<std::string, double>> params);

  double p(const char* name) const;

  LawKind kind_;
  std::vector<std::pair<std::string, double>> params_;  // ordered, per kind
};

}  // namespace snoise
