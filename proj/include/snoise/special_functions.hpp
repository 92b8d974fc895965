#pragma once

namespace snoise::sf {

// Scalar special functions used by the distribution catalog. All are pure
// and safe to call concurrently. Domain violations throw std::domain_error;
// results beyond double range throw std::overflow_error. Silent NaN is never
// returned.

struct EvalResult {
  double value;
  double abs_error_bound;  // finite and >= 0 for every accepted input
};

// log Gamma(x), x > 0. Lanczos approximation (g = 7, 9 terms).
double log_gamma(double x);

// Gamma(x), x > 0. Relative error <= 1e-12 on (0, 170].
double gamma_fn(double x);
EvalResult gamma_fn_checked(double x);

// Regularized incomplete gamma: lower tail P(a, x) and upper tail Q(a, x),
// a > 0, x >= 0. Q avoids the 1 - P cancellation deep in the tail.
double gamma_p(double a, double x);
double gamma_q(double a, double x);

// Modified Bessel function of the first kind I_nu(x), nu >= -1, x >= 0.
// Power series for x <= 60, large-x asymptotic expansion beyond; the two
// regimes agree near the switchover. x = 0 with nu < 0 (non-integer) is
// rejected: the limit is infinite.
double bessel_i(double nu, double x);
EvalResult bessel_i_checked(double nu, double x);

// exp(-x) * I_nu(x); never overflows for x within double range.
double bessel_i_scaled(double nu, double x);

// Mittag-Leffler function E_rho(z) for 0 < rho <= 1 and z <= 0.
// Absolute error <= 1e-10 on z in [-50, 0]. Power series while its estimated
// cancellation stays below 1e-11, spectral-integral fallback otherwise.
double mittag_leffler(double rho, double z);
EvalResult mittag_leffler_checked(double rho, double z);

// -(d/dy) E_rho(-y) for y >= 0; the density kernel of the Mittag-Leffler
// family. Same series/integral strategy as mittag_leffler.
double mittag_leffler_neg_deriv(double rho, double y);

}  // namespace snoise::sf
