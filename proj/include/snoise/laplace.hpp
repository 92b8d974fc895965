#pragma once

#include <functional>
#include <string>

#include "snoise/laws.hpp"

namespace snoise {

enum class LtProvenance { ClosedForm, ComposedSn, ComposedBdlp, Subordinated, Numeric };

// Laplace transform of a positive law, carried in log form so deep-tail
// evaluations (local-index checks run out to s = 1e6) never underflow.
// Immutable; evaluation is pure and safe to share across threads.
class LaplaceTransform {
 public:
  using Fn = std::function<double(double)>;

  static LaplaceTransform from_log(Fn log_eval, LtProvenance prov, bool sd_known = false);
  static LaplaceTransform from_log(Fn log_eval, Fn dlog_eval, LtProvenance prov,
                                   bool sd_known = false);
  static LaplaceTransform from_phi(Fn eval, LtProvenance prov, bool sd_known = false);
  // Closed-form log transform of a catalog law. Throws UnsupportedError for
  // laws without a Laplace transform.
  static LaplaceTransform of_law(const NamedLaw& law);

  double log_phi(double s) const;
  double phi(double s) const;
  double operator()(double s) const { return phi(s); }

  // d/ds log phi(s): exact when the construction supplied it, otherwise
  // Richardson-extrapolated central differences with step scaled to s.
  double dlog_phi(double s) const;
  // -s (log phi)'(s); tends to the regular-variation index of the law at 0.
  double local_index(double s) const { return -s * dlog_phi(s); }

  bool analytic_derivative() const { return static_cast<bool>(dlog_); }
  LtProvenance provenance() const { return prov_; }
  // True when the construction guarantees selfdecomposability (catalog
  // metadata or a representation that only produces SD laws).
  bool sd_known() const { return sd_; }

 private:
  LaplaceTransform(Fn log_eval, Fn dlog_eval, LtProvenance prov, bool sd);
  Fn log_;
  Fn dlog_;
  LtProvenance prov_;
  bool sd_;
};

// Stationary shot-noise transform generated by a jump law with transform G
// and rate ratio rho:
//   log phi(s) = -rho Int_0^s (1 - G(u)) du/u,
// with exact derivative (log phi)'(s) = -rho (1 - G(s))/s. The integral is
// taken in v = ln(s/u), which removes the endpoint singularity for every
// jump law at once and decays exponentially.
LaplaceTransform sn_lt_from_jumps(const LaplaceTransform& jump_lt, double rho);

// Inverse of sn_lt_from_jumps: recovers the jump transform
//   G(s) = 1 + (1/rho) s (log phi)'(s).
// Throws NotValidLtError when the recovered values leave [0, 1] beyond
// tolerance on the validation grid; that signals phi is not a shot-noise
// transform with this rho.
LaplaceTransform jump_lt_from_sn(const LaplaceTransform& phi, double rho, double tol = 1e-5);

// Transform of the driving Levy process at time 1 for a selfdecomposable
// phi: log psi(s) = s (log phi)'(s). log psi must be <= 0 for a genuinely SD
// input; the largest violation found on the validation grid is written to
// *max_violation when supplied (diagnostic, not fatal).
LaplaceTransform bdlp_from_sd(const LaplaceTransform& phi, double* max_violation = nullptr);

// Inverse map: log phi(s) = Int_0^s log psi(r) dr/r. Requires
// log psi(0+) = 0; throws SingularIntegrandError otherwise.
LaplaceTransform sd_from_bdlp(const LaplaceTransform& psi);

// Subordination at the transform level: phi3(s) = phi2(-ln phi1(s)).
LaplaceTransform subordinate(const LaplaceTransform& phi1, const LaplaceTransform& phi2);

struct LtCheck {
  bool ok;
  std::string detail;  // first violated property, with location
};

// Grid proxy for complete monotonicity: phi in (0, 1], nonincreasing,
// log-convex, on a geometric grid in [1e-6, 100].
LtCheck check_lt(const LaplaceTransform& lt, double tol = 1e-7);

struct Inversion {
  double value;
  double err;  // sequence-acceleration discrepancy, an achieved-precision estimate
};

// Gaver-Stehfest inversion of phi(s)/s, i.e. the CDF F(x) of the law behind
// phi. value is clamped to [0, 1]; err compares the n = 14 and n = 12
// accelerations.
Inversion invert_lt_cdf_checked(const LaplaceTransform& phi, double x);
double invert_lt_cdf(const LaplaceTransform& phi, double x);

}  // namespace snoise
