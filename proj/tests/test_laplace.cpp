#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <vector>

#include "snoise/errors.hpp"
#include "snoise/laplace.hpp"
#include "snoise/laws.hpp"
#include "snoise/quadrature.hpp"
#include "snoise/random.hpp"
#include "snoise/special_functions.hpp"

using namespace snoise;

namespace {

std::vector<double> log_grid(double lo, double hi, int n) {
  std::vector<double> g(n);
  for (int i = 0; i < n; ++i) g[i] = lo * std::pow(hi / lo, double(i) / (n - 1));
  return g;
}

// partial sum of the alternating power series for the positive Linnik CDF,
// beta = 1: F(x) = 1 - sum_k (-x^rho)^k / Gamma(1 + rho k)
double linnik_cdf_series(double rho, double x, int terms) {
  double sum = 0.0;
  for (int k = 0; k < terms; ++k) {
    double mag = std::exp(rho * k * std::log(x) - std::lgamma(1.0 + rho * k));
    sum += (k % 2 == 0) ? mag : -mag;
  }
  return 1.0 - sum;
}

}  // namespace

TEST_CASE("closed-form transforms evaluate in log space with exact derivatives") {
  auto g = LaplaceTransform::of_law(NamedLaw::gamma_law(2.0, 1.0));
  CHECK(g.phi(2.0) == doctest::Approx(1.0 / 9.0).epsilon(1e-14));
  CHECK(g.log_phi(1e6) == doctest::Approx(-2.0 * std::log1p(1e6)).epsilon(1e-14));
  CHECK(g.dlog_phi(3.0) == doctest::Approx(-0.5).epsilon(1e-14));
  CHECK(g.local_index(1e6) == doctest::Approx(2.0).epsilon(1e-5));
  CHECK(g.analytic_derivative());
  CHECK(g.sd_known());
  CHECK(g.provenance() == LtProvenance::ClosedForm);

  auto pl = LaplaceTransform::of_law(NamedLaw::positive_linnik(0.5, 1.0));
  CHECK(pl.phi(4.0) == doctest::Approx(1.0 / 3.0).epsilon(1e-14));
  CHECK(pl.local_index(1e8) == doctest::Approx(0.5).epsilon(1e-3));

  auto bes = LaplaceTransform::of_law(NamedLaw::bessel(1.0));
  CHECK(bes.phi(1.0) == doctest::Approx(0.5 * std::exp(-0.5)).epsilon(1e-14));

  CHECK(g.phi(0.0) == 1.0);
  CHECK_THROWS_AS(g.log_phi(-1.0), std::domain_error);
  CHECK_THROWS_AS(LaplaceTransform::of_law(NamedLaw::log_cauchy()), UnsupportedError);
}

TEST_CASE("finite-difference derivative matches analytic rates on smooth transforms") {
  // same gamma transform, but construction withholds the derivative
  auto lt = LaplaceTransform::from_log(
      [](double s) { return -1.7 * std::log1p(s / 0.8); }, LtProvenance::ClosedForm);
  CHECK_FALSE(lt.analytic_derivative());
  for (double s : {0.01, 0.1, 1.0, 10.0, 100.0, 1000.0}) {
    CAPTURE(s);
    double want = -1.7 / (0.8 + s);
    CHECK(lt.dlog_phi(s) == doctest::Approx(want).epsilon(1e-7));
  }
}

TEST_CASE("exponential jumps generate the gamma transform") {
  auto sn = sn_lt_from_jumps(LaplaceTransform::of_law(NamedLaw::exponential(1.0)), 2.0);
  for (double s : {0.5, 1.0, 2.0}) {
    CAPTURE(s);
    CHECK(sn.phi(s) == doctest::Approx(std::pow(1.0 + s, -2.0)).epsilon(1e-8));
  }
  // quadrature-backed value and carried derivative agree
  for (double s : {0.7, 13.0}) {
    double h = s * 3e-6;
    double cd = (sn.log_phi(s + h) - sn.log_phi(s - h)) / (2.0 * h);
    CHECK(sn.dlog_phi(s) == doctest::Approx(cd).epsilon(1e-6));
  }
  // the local index climbs monotonically to rho
  double prev = 0.0;
  for (double s : {1e3, 1e4, 1e5, 1e6}) {
    double idx = sn.local_index(s);
    CHECK(idx > prev);
    prev = idx;
  }
  CHECK(prev == doctest::Approx(2.0).epsilon(1e-5));
  CHECK(sn.sd_known());

  auto quiet = sn_lt_from_jumps(LaplaceTransform::of_law(NamedLaw::degenerate(0.0)), 3.0);
  CHECK(quiet.phi(5.0) == doctest::Approx(1.0).epsilon(1e-12));
  CHECK_THROWS_AS(sn_lt_from_jumps(quiet, -1.0), ConfigError);
}

TEST_CASE("positive Linnik generates itself and chains into generalized Linnik") {
  auto linnik = LaplaceTransform::of_law(NamedLaw::positive_linnik(0.5, 1.0));
  auto sn = sn_lt_from_jumps(linnik, 0.5);
  for (double s : log_grid(0.01, 100.0, 20)) {
    CAPTURE(s);
    CHECK(std::fabs(sn.phi(s) - linnik.phi(s)) < 1e-6);
  }
  auto gl = sn_lt_from_jumps(LaplaceTransform::of_law(NamedLaw::positive_linnik(0.6, 1.5)), 1.5);
  auto gl_closed = LaplaceTransform::of_law(NamedLaw::generalized_linnik(1.5, 0.6, 1.5));
  for (double s : log_grid(0.01, 100.0, 40)) {
    CAPTURE(s);
    CHECK(std::fabs(gl.phi(s) - gl_closed.phi(s)) < 1e-6);
  }
}

TEST_CASE("jump recovery inverts the shot-noise composition") {
  auto gamma2 = LaplaceTransform::of_law(NamedLaw::gamma_law(2.0, 1.0));
  auto jumps = jump_lt_from_sn(gamma2, 2.0);
  for (double s : log_grid(0.01, 100.0, 20)) {
    CAPTURE(s);
    CHECK(jumps.phi(s) == doctest::Approx(1.0 / (1.0 + s)).epsilon(1e-10));
  }

  const std::vector<NamedLaw> jump_laws = {NamedLaw::exponential(1.0),
                                           NamedLaw::gamma_law(2.0, 1.0),
                                           NamedLaw::degenerate(1.0)};
  for (const auto& law : jump_laws) {
    CAPTURE(law.describe());
    auto g = LaplaceTransform::of_law(law);
    auto roundtrip = jump_lt_from_sn(sn_lt_from_jumps(g, 1.3), 1.3);
    for (double s : log_grid(0.01, 100.0, 40)) {
      CHECK(std::fabs(roundtrip.phi(s) - g.phi(s)) < 1e-6);
    }
  }

  // the linnik transform is a shot-noise transform for its own rho only;
  // a stable transform is selfdecomposable but not shot-noise at all
  auto linnik = LaplaceTransform::of_law(NamedLaw::positive_linnik(0.5, 1.0));
  auto self = jump_lt_from_sn(linnik, 0.5);
  for (double s : log_grid(0.01, 100.0, 20))
    CHECK(std::fabs(self.phi(s) - linnik.phi(s)) < 1e-6);
  CHECK_THROWS_AS(jump_lt_from_sn(LaplaceTransform::of_law(NamedLaw::positive_stable(0.5)), 1.0),
                  NotValidLtError);
}

TEST_CASE("driving-process identification and its inverse") {
  auto gamma = LaplaceTransform::of_law(NamedLaw::gamma_law(0.7, 1.3));
  double viol = -1.0;
  auto psi = bdlp_from_sd(gamma, &viol);
  CHECK(viol == 0.0);
  for (double s : log_grid(0.01, 100.0, 20)) {
    CAPTURE(s);
    CHECK(psi.log_phi(s) == doctest::Approx(-0.7 * s / (s + 1.3)).epsilon(1e-12));
  }
  auto pl = LaplaceTransform::of_law(NamedLaw::positive_linnik(0.5, 1.0));
  auto psi_pl = bdlp_from_sd(pl);
  for (double s : log_grid(0.01, 100.0, 20)) {
    double p = std::sqrt(s);
    CHECK(psi_pl.log_phi(s) == doctest::Approx(-0.5 * p / (1.0 + p)).epsilon(1e-12));
  }

  // transform -> driver -> transform, quadrature against the analytic rate
  const std::vector<NamedLaw> sd_laws = {NamedLaw::gamma_law(0.7, 1.3),
                                         NamedLaw::positive_linnik(0.5, 1.0),
                                         NamedLaw::generalized_linnik(1.5, 0.6, 1.0)};
  for (const auto& law : sd_laws) {
    CAPTURE(law.describe());
    auto phi = LaplaceTransform::of_law(law);
    auto back = sd_from_bdlp(bdlp_from_sd(phi));
    CHECK(back.sd_known());
    for (double s : log_grid(0.01, 100.0, 40)) {
      CHECK(std::fabs(back.phi(s) - phi.phi(s)) < 1e-6);
    }
  }

  // a compound-Poisson driver reproduces the shot-noise composition
  double rho = 1.4;
  auto g = LaplaceTransform::of_law(NamedLaw::gamma_law(2.0, 1.0));
  auto psi_cp = LaplaceTransform::from_log(
      [g, rho](double s) { return rho * std::expm1(g.log_phi(s)); }, LtProvenance::ClosedForm);
  auto via_driver = sd_from_bdlp(psi_cp);
  auto via_jumps = sn_lt_from_jumps(g, rho);
  for (double s : log_grid(0.01, 100.0, 20)) {
    CAPTURE(s);
    CHECK(std::fabs(via_driver.phi(s) - via_jumps.phi(s)) < 1e-6);
  }

  // driver that does not vanish at 0+ has no selfdecomposable parent
  auto defective = LaplaceTransform::from_log([](double) { return std::log(0.5); },
                                              LtProvenance::Numeric);
  CHECK_THROWS_AS(sd_from_bdlp(defective), SingularIntegrandError);

  // a non-monotone "transform" trips the nonpositivity diagnostic
  auto bogus = LaplaceTransform::from_log(
      [](double s) { return -s + 0.8 * std::sin(2.0 * s); }, LtProvenance::Numeric);
  double bad = 0.0;
  bdlp_from_sd(bogus, &bad);
  CHECK(bad > 0.1);
}

TEST_CASE("subordination composes transforms and goes slowly varying") {
  auto unit_gamma = LaplaceTransform::of_law(NamedLaw::gamma_law(1.0, 1.0));
  auto sub = subordinate(unit_gamma, unit_gamma);
  for (double s : log_grid(0.01, 1e6, 30)) {
    CAPTURE(s);
    CHECK(sub.phi(s) == doctest::Approx(1.0 / (1.0 + std::log1p(s))).epsilon(1e-12));
  }
  double want_idx = 1e6 / ((1.0 + 1e6) * (1.0 + std::log1p(1e6)));
  CHECK(sub.local_index(1e6) == doctest::Approx(want_idx).epsilon(1e-10));
  CHECK(sub.local_index(1e6) < 0.1);
  CHECK_FALSE(sub.sd_known());

  auto unit = sn_lt_from_jumps(LaplaceTransform::of_law(NamedLaw::degenerate(0.0)), 1.0);
  auto trivial = subordinate(unit, unit_gamma);
  CHECK(trivial.phi(7.0) == doctest::Approx(1.0).epsilon(1e-10));

  // Monte Carlo check of the composition direction: T ~ Exp(1), then
  // X | T ~ Gamma(T, 1) has transform E (1+s)^{-T} = phi2(-ln phi1(s))
  RandomStream rng(20260815);
  const int n = 200000;
  for (double s : {0.5, 2.0}) {
    double acc = 0.0;
    RandomStream inner(77);
    for (int i = 0; i < n; ++i) {
      double t = inner.exponential(1.0);
      double x = inner.gamma_variate(t, 1.0);
      acc += std::exp(-s * x);
    }
    CAPTURE(s);
    CHECK(acc / n == doctest::Approx(sub.phi(s)).epsilon(0.01));
  }
  (void)rng;
}

TEST_CASE("grid proxy for complete monotonicity accepts the catalog and rejects impostors") {
  const std::vector<NamedLaw> with_lt = {
      NamedLaw::exponential(2.0),          NamedLaw::gamma_law(0.5, 1.0),
      NamedLaw::positive_stable(0.4),      NamedLaw::positive_linnik(0.7, 2.0),
      NamedLaw::generalized_linnik(1.2, 0.5, 1.0), NamedLaw::bessel(1.5),
      NamedLaw::degenerate(2.0)};
  for (const auto& law : with_lt) {
    CAPTURE(law.describe());
    CHECK(check_lt(LaplaceTransform::of_law(law)).ok);
  }
  CHECK(check_lt(sn_lt_from_jumps(LaplaceTransform::of_law(NamedLaw::gamma_law(2.0, 1.0)), 0.5))
            .ok);

  auto increasing = LaplaceTransform::from_log([](double s) { return 0.1 * s; },
                                               LtProvenance::Numeric);
  CHECK_FALSE(check_lt(increasing).ok);
  auto defective = LaplaceTransform::from_log([](double) { return std::log(0.5); },
                                              LtProvenance::Numeric);
  CHECK_FALSE(check_lt(defective).ok);
  // exp(-s^2) decays but is not completely monotone: log-convexity fails
  auto gaussian = LaplaceTransform::from_log([](double s) { return -s * s; },
                                             LtProvenance::Numeric);
  auto res = check_lt(gaussian);
  CHECK_FALSE(res.ok);
  CHECK(res.detail.find("convex") != std::string::npos);
}

TEST_CASE("inversion recovers distribution functions from transforms") {
  auto expo = LaplaceTransform::of_law(NamedLaw::exponential(1.0));
  CHECK(invert_lt_cdf(expo, 1.0) == doctest::Approx(1.0 - std::exp(-1.0)).epsilon(1e-5));

  struct Case {
    NamedLaw law;
    std::function<double(double)> cdf;
  };
  const std::vector<Case> cases = {
      {NamedLaw::exponential(1.0), [](double x) { return -std::expm1(-x); }},
      {NamedLaw::gamma_law(2.0, 1.0),
       [](double x) { return 1.0 - (1.0 + x) * std::exp(-x); }},
      {NamedLaw::gamma_law(0.5, 2.0), [](double x) { return sf::gamma_p(0.5, 2.0 * x); }},
  };
  for (const auto& c : cases) {
    CAPTURE(c.law.describe());
    auto lt = LaplaceTransform::of_law(c.law);
    for (double x : log_grid(0.05, 20.0, 20)) {
      auto got = invert_lt_cdf_checked(lt, x);
      CHECK(std::fabs(got.value - c.cdf(x)) < 1e-4);
      CHECK(got.err < 1e-3);
    }
  }

  // Linnik: against a 30-term series partial sum (small x), then the
  // catalog's spectral-route CDF across the grid
  auto pl = NamedLaw::positive_linnik(0.5, 1.0);
  auto pl_lt = LaplaceTransform::of_law(pl);
  for (double x : {0.1, 0.5, 1.0, 2.0}) {
    CAPTURE(x);
    CHECK(std::fabs(invert_lt_cdf(pl_lt, x) - linnik_cdf_series(0.5, x, 30)) < 1e-4);
  }
  for (double x : log_grid(0.05, 20.0, 20)) {
    CAPTURE(x);
    CHECK(std::fabs(invert_lt_cdf(pl_lt, x) - pl.cdf(x)) < 1e-4);
  }

  // transform written the long way round, against quadrature of the density
  auto bes = LaplaceTransform::from_log(
      [](double s) { return -std::log1p(s) - (1.0 - 1.0 / (1.0 + s)); },
      LtProvenance::Numeric);
  auto bessel_law = NamedLaw::bessel(1.0);
  for (double x : log_grid(0.1, 10.0, 20)) {
    CAPTURE(x);
    double by_quad = integrate([&](double u) { return bessel_law.pdf(u); }, 0.0, x, 1e-10, 1e-9);
    CHECK(std::fabs(invert_lt_cdf(bes, x) - by_quad) < 1e-4);
  }

  CHECK_THROWS_AS(invert_lt_cdf(expo, 0.0), std::domain_error);
}
