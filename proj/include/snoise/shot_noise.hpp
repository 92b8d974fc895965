#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "snoise/laws.hpp"
#include "snoise/random.hpp"

namespace snoise {

// Response kernel h applied to each arrival. All kinds are nonnegative and,
// except the indicator, eventually decreasing to 0.
class ResponseFunction {
 public:
  enum class Kind { Exponential, Power, Indicator, Tabulated };

  static ResponseFunction exponential(double omega);          // h(s) = e^{-omega s}
  static ResponseFunction power(double alpha);                // h(s) = s^{-alpha}, alpha > 1
  static ResponseFunction indicator(double a, double b);      // h = 1 on (a, b)
  // piecewise-linear interpolation through (s, h) pairs, 0 outside the grid
  static ResponseFunction tabulated(std::vector<std::pair<double, double>> points);

  double operator()(double s) const;
  Kind kind() const { return kind_; }
  double omega() const;  // Exponential only
  double alpha() const;  // Power only
  std::pair<double, double> window() const;  // Indicator only
  const std::vector<std::pair<double, double>>& knots() const;  // Tabulated only
  // beyond this time the response is identically zero (indicator/tabulated);
  // unset for the decaying kinds
  std::optional<double> support_end() const;

 private:
  ResponseFunction(Kind k, double p1, double p2,
                   std::vector<std::pair<double, double>> pts);
  Kind kind_;
  double p1_, p2_;
  std::vector<std::pair<double, double>> pts_;
};

struct ShotNoiseModel {
  double lambda;             // Poisson arrival rate
  NamedLaw jumps;            // positive jump law
  ResponseFunction response;
  double x0 = 0.0;           // initial value; exponential response only

  ShotNoiseModel(double lambda_, NamedLaw jumps_, ResponseFunction response_, double x0_ = 0.0);
  // lambda/omega; defined only for the exponential response
  double rho_param() const;
};

struct ConvergenceVerdict {
  enum class Status { Converges, Diverges, Unknown };
  Status status;
  std::string criterion;                  // which rule decided
  std::optional<double> numeric_integral; // value of the defining integral when computed
};

struct PathPoint {
  double t;
  double x;
};

// Transient path of the exponential-response process started at x0: decays
// by e^{-omega dt} between arrivals and jumps by xi at each arrival. Points
// are recorded at t = 0, at every arrival (post-jump), and at t_max.
std::vector<PathPoint> simulate_path(const ShotNoiseModel& model, double t_max,
                                     RandomStream& rng);

// Closed-form existence criteria where available; for tabulated responses
// the defining integral Int_0^inf E(1 ^ h(s) xi) ds is evaluated
// numerically. Numeric evidence alone never yields Diverges.
ConvergenceVerdict existence_check(const ShotNoiseModel& model);

// n independent draws of the stationary value sum xi_k h(tau_k) for the
// exponential response, truncated at a horizon chosen so the expected
// (or, for infinite-mean jumps, 99th-percentile estimated) tail is < tol.
std::vector<double> sample_stationary(const ShotNoiseModel& model, std::size_t n, double tol,
                                      RandomStream& rng);

// Same series for a general response kernel.
std::vector<double> shot_noise_transform_samples(const ShotNoiseModel& model, std::size_t n,
                                                 double tol, RandomStream& rng);

// Upper tail M([x, inf)) of the output Levy measure up to time t:
// lambda Int_0^t P(xi > x / h(s)) ds; t may be +inf where the integral
// converges (throws DivergenceError otherwise).
double levy_measure_tail(const ShotNoiseModel& model, double x, double t);

}  // namespace snoise
