#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include <json.hpp>

#include "snoise/laplace.hpp"
#include "snoise/laws.hpp"
#include "snoise/random.hpp"

namespace snoise {

// One-sample Kolmogorov-Smirnov sup-distance against a continuous cdf.
double ks_distance(std::vector<double> samples, const std::function<double(double)>& cdf);
// Two-sample variant.
double ks_distance(std::vector<double> a, std::vector<double> b);
// 99% asymptotic acceptance bands, 1.628/sqrt(n) and the two-sample analogue.
double ks_band(std::size_t n);
double ks_band(std::size_t n, std::size_t m);

// (1 - F(x)) / F(1/x) for the positive Linnik law; tends to
// beta^2 Gamma(1+rho) / Gamma(1-rho) as x -> inf, rho in (0,1).
double linnik_tail_ratio(double rho, double beta, double x);

// Estimate of rho in F(x) ~ x^rho L(x) near 0, or of the matching
// transform decay rate. value = +inf flags decay faster than every power
// (established growth past 10 across nested windows).
struct IndexEstimate {
  double value;
  double ci_lo, ci_hi;
  bool converged;  // window scan / extrapolation reached agreement
  bool monotone;   // intermediate sequence was monotone (warning when not)
};

// Log-log regression of F over a geometric small-x window; the window walks
// inward until three nested windows agree within 5%. CI from regression
// residuals plus the drift between the agreeing windows.
IndexEstimate rv_index_at_zero(const std::function<double(double)>& cdf);
// Empirical-cdf variant; CI by bootstrap of the window counts. Uses its own
// fixed stream unless one is supplied. Throws InsufficientDataError when
// fewer than 100 points land in the scan window.
IndexEstimate rv_index_at_zero(const std::vector<double>& samples, RandomStream* rng = nullptr);
// Limit of -s phi'(s)/phi(s) as s -> inf, evaluated at s = 1e2..1e6 with
// extrapolation in 1/ln s. value -> 0 signals slow variation of F at 0.
IndexEstimate rv_index_from_lt(const LaplaceTransform& phi);

enum class Verdict { ShotNoise, SelfDecomposableNotSN, NotSD_SlowVariation, Inconclusive };
enum class DiagnosisMethod { FromSamples, FromCDF, FromLT };
const char* to_string(Verdict v);
const char* to_string(DiagnosisMethod m);

struct EvidenceRecord {
  std::string check;
  double value;
  double threshold;
};

struct DiagnosisReport {
  Verdict verdict;
  double index;  // +inf for established rapid decay
  double ci_lo, ci_hi;
  DiagnosisMethod method;
  std::vector<EvidenceRecord> evidence;

  // {verdict, index, ci:[lo,hi], method, evidence:[{check,value,threshold}]};
  // non-finite numbers serialize as null
  nlohmann::json to_json() const;
};

// Verdict logic, in order:
//   slow variation (ratio test F(2x)/F(x), F(10x)/F(x) near 1 at the two
//     smallest window points, and window slope under 0.1)  -> NotSD_SlowVariation
//   established rapid decay -> SelfDecomposableNotSN when selfdecomposability
//     is asserted by provenance, otherwise Inconclusive
//   converged index in [0.1, 10] with CI excluding 0 -> ShotNoise
//   anything else -> Inconclusive
DiagnosisReport classify(const NamedLaw& law);
DiagnosisReport classify(const LaplaceTransform& phi);
DiagnosisReport classify(const std::vector<double>& samples, RandomStream* rng = nullptr);

}  // namespace snoise
