#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <limits>
#include <vector>

#include "snoise/diagnostics.hpp"
#include "snoise/errors.hpp"
#include "snoise/laplace.hpp"
#include "snoise/laws.hpp"
#include "snoise/random.hpp"
#include "snoise/shot_noise.hpp"

using namespace snoise;

namespace {

std::vector<double> draw(const NamedLaw& law, size_t n, uint64_t seed) {
  RandomStream rng(seed);
  std::vector<double> xs(n);
  for (auto& x : xs) x = law.sample(rng);
  return xs;
}

double width(const IndexEstimate& e) { return e.ci_hi - e.ci_lo; }

}  // namespace

TEST_CASE("KS distance: pinned small cases and calibration") {
  // one sample sitting at the median
  CHECK(ks_distance({1.0}, [](double) { return 0.5; }) == doctest::Approx(0.5));
  // all mass at zero against a law with F(0) = 0
  std::vector<double> zeros(50, 0.0);
  CHECK(ks_distance(zeros, [](double x) { return 1.0 - std::exp(-x); }) ==
        doctest::Approx(1.0));
  CHECK_THROWS_AS(ks_distance({}, [](double) { return 0.5; }), ConfigError);

  auto law = NamedLaw::gamma_law(2.0, 1.0);
  auto xs = draw(law, 100000, 42);
  CHECK(ks_distance(xs, [&](double x) { return law.cdf(x); }) < ks_band(xs.size()));

  // two-sample: same law passes, shifted law fails
  auto ys = draw(law, 50000, 43);
  CHECK(ks_distance(xs, ys) < ks_band(xs.size(), ys.size()));
  auto zs = ys;
  for (auto& z : zs) z += 0.25;
  CHECK(ks_distance(xs, zs) > ks_band(xs.size(), zs.size()));

  CHECK(ks_band(10000) == doctest::Approx(0.01628));
  CHECK(ks_band(10000, 10000) == doctest::Approx(0.01628 * std::sqrt(2.0)));
}

TEST_CASE("tail-vs-origin ratio of the positive Linnik law") {
  // limit beta^2 Gamma(1+rho)/Gamma(1-rho); for rho = 1/2 that is beta^2/2
  CHECK(linnik_tail_ratio(0.5, 1.0, 1e3) == doctest::Approx(0.5).epsilon(0.10));
  CHECK(linnik_tail_ratio(0.5, 1.0, 1e4) == doctest::Approx(0.5).epsilon(0.10));
  CHECK(linnik_tail_ratio(0.5, 2.0, 1e4) == doctest::Approx(2.0).epsilon(0.10));

  // approach is monotone in x
  double prev = std::numeric_limits<double>::infinity();
  for (double x : {1e2, 1e3, 1e4, 1e5}) {
    double gap = std::fabs(linnik_tail_ratio(0.5, 1.0, x) - 0.5);
    CHECK(gap < prev);
    prev = gap;
  }

  // x = 1 compares the point to itself
  auto pl = NamedLaw::positive_linnik(0.7, 1.5);
  CHECK(linnik_tail_ratio(0.7, 1.5, 1.0) ==
        doctest::Approx(pl.upper_tail(1.0) / pl.cdf(1.0)).epsilon(1e-12));

  CHECK_THROWS_AS(linnik_tail_ratio(1.0, 1.0, 10.0), ConfigError);
  CHECK_THROWS_AS(linnik_tail_ratio(0.5, 0.0, 10.0), ConfigError);
  CHECK_THROWS_AS(linnik_tail_ratio(0.5, 1.0, std::numeric_limits<double>::infinity()),
                  NumericError);
}

TEST_CASE("index at zero from analytic distribution functions") {
  auto weib = NamedLaw::weibull(0.5, 1.0);
  auto e1 = rv_index_at_zero([&](double x) { return weib.cdf(x); });
  CHECK(e1.converged);
  CHECK(e1.value == doctest::Approx(0.5).epsilon(0.10));

  auto e2 = rv_index_at_zero([](double x) { return 1.0 - std::exp(-x); });
  CHECK(e2.value == doctest::Approx(1.0).epsilon(0.05));

  auto gam = NamedLaw::gamma_law(2.0, 1.0);
  auto e3 = rv_index_at_zero([&](double x) { return gam.cdf(x); });
  CHECK(e3.value == doctest::Approx(2.0).epsilon(0.05));
  CHECK(e3.ci_lo < 2.0);
  CHECK(2.0 < e3.ci_hi);

  auto burr = NamedLaw::burr(0.7, 1.0, 2.0);
  auto e4 = rv_index_at_zero([&](double x) { return burr.cdf(x); });
  CHECK(e4.value == doctest::Approx(0.7).epsilon(0.10));

  // rescaling the argument leaves the estimate alone
  for (double c : {0.1, 10.0}) {
    auto es = rv_index_at_zero([&](double x) { return weib.cdf(x / c); });
    CHECK(es.value == doctest::Approx(e1.value).epsilon(1e-6));
  }
}

TEST_CASE("index at zero from samples, bootstrap interval") {
  for (double rho : {0.5, 1.0, 2.0}) {
    auto xs = draw(NamedLaw::gamma_law(rho, 1.0), 100000, 7000 + uint64_t(10 * rho));
    auto e = rv_index_at_zero(xs);
    CAPTURE(rho);
    CHECK(e.converged);
    CHECK(std::fabs(e.value - rho) < 0.15 * rho);
    CHECK(e.ci_lo < e.value);
    CHECK(e.value < e.ci_hi);
  }

  // deterministic without a caller stream
  auto xs = draw(NamedLaw::gamma_law(1.0, 1.0), 20000, 11);
  auto a = rv_index_at_zero(xs);
  auto b = rv_index_at_zero(xs);
  CHECK(a.ci_lo == b.ci_lo);
  CHECK(a.ci_hi == b.ci_hi);

  CHECK_THROWS_AS(rv_index_at_zero(draw(NamedLaw::gamma_law(2.0, 1.0), 500, 3)),
                  InsufficientDataError);
  CHECK_THROWS_AS(rv_index_at_zero(std::vector<double>(15, 1.0)), InsufficientDataError);
  CHECK_THROWS_AS(rv_index_at_zero(std::vector<double>(1000, 0.0)), ConfigError);
}

TEST_CASE("index from transforms by extrapolation of the local rate") {
  auto g = rv_index_from_lt(LaplaceTransform::of_law(NamedLaw::gamma_law(2.0, 1.0)));
  CHECK(g.converged);
  CHECK(g.value == doctest::Approx(2.0).epsilon(0.005));

  auto pl = rv_index_from_lt(LaplaceTransform::of_law(NamedLaw::positive_linnik(0.5, 1.0)));
  CHECK(pl.converged);
  CHECK(pl.value == doctest::Approx(0.5).epsilon(0.01));

  auto bes = rv_index_from_lt(LaplaceTransform::of_law(NamedLaw::bessel(1.3)));
  CHECK(bes.value == doctest::Approx(1.3).epsilon(0.01));

  // transform decaying faster than every power: reported as an infinite index
  auto st = rv_index_from_lt(LaplaceTransform::of_law(NamedLaw::positive_stable(0.5)));
  CHECK(std::isinf(st.value));
  CHECK(st.converged);

  // slowly varying composition: limit index 0
  auto g11 = LaplaceTransform::of_law(NamedLaw::gamma_law(1.0, 1.0));
  auto sub = rv_index_from_lt(subordinate(g11, g11));
  CHECK(sub.value < 0.05);
}

TEST_CASE("classification of catalog laws from their distribution functions") {
  auto hc = classify(NamedLaw::half_cauchy());
  CHECK(hc.verdict == Verdict::ShotNoise);
  CHECK(hc.index == doctest::Approx(1.0).epsilon(0.10));
  CHECK(hc.ci_lo > 0.0);
  CHECK(hc.method == DiagnosisMethod::FromCDF);

  auto g = classify(NamedLaw::gamma_law(0.5, 1.0));
  CHECK(g.verdict == Verdict::ShotNoise);
  CHECK(g.index == doctest::Approx(0.5).epsilon(0.10));

  auto lc = classify(NamedLaw::log_cauchy());
  CHECK(lc.verdict == Verdict::NotSD_SlowVariation);
  CHECK(lc.ci_lo == 0.0);
  CHECK(lc.ci_hi < 0.1);

  auto st = classify(NamedLaw::positive_stable(0.6));
  CHECK(st.verdict == Verdict::SelfDecomposableNotSN);
  CHECK(std::isinf(st.index));

  CHECK(classify(NamedLaw::degenerate(2.0)).verdict == Verdict::Inconclusive);
  CHECK(classify(NamedLaw::log_pareto()).verdict == Verdict::Inconclusive);

  auto w = classify(NamedLaw::weibull(0.5, 1.0));
  CHECK(w.verdict == Verdict::ShotNoise);
  CHECK(w.index == doctest::Approx(0.5).epsilon(0.15));

  // report serialization carries the full evidence trail
  auto j = hc.to_json();
  CHECK(j["verdict"] == "ShotNoise");
  CHECK(j["method"] == "FromCDF");
  CHECK(j["ci"].size() == 2);
  CHECK(j["index"].get<double>() == doctest::Approx(hc.index));
  CHECK(j["evidence"].size() >= 4);
  for (const auto& r : j["evidence"]) {
    CHECK(r.contains("check"));
    CHECK(r.contains("value"));
    CHECK(r.contains("threshold"));
  }
  // infinite index serializes as null rather than breaking the document
  CHECK(st.to_json()["index"].is_null());
}

TEST_CASE("classification from transforms") {
  auto jumps = LaplaceTransform::of_law(NamedLaw::exponential(1.0));
  auto sn = classify(sn_lt_from_jumps(jumps, 2.0));
  CHECK(sn.verdict == Verdict::ShotNoise);
  CHECK(sn.index == doctest::Approx(2.0).epsilon(0.01));
  CHECK(sn.method == DiagnosisMethod::FromLT);

  auto g11 = LaplaceTransform::of_law(NamedLaw::gamma_law(1.0, 1.0));
  auto sub = classify(subordinate(g11, g11));
  CHECK(sub.verdict == Verdict::NotSD_SlowVariation);
  CHECK(sub.ci_lo == 0.0);
  CHECK(sub.ci_hi < 0.1);

  auto st = classify(LaplaceTransform::of_law(NamedLaw::positive_stable(0.5)));
  CHECK(st.verdict == Verdict::SelfDecomposableNotSN);
}

TEST_CASE("classification from samples") {
  auto xs = draw(NamedLaw::gamma_law(2.0, 1.0), 50000, 19);
  auto rep = classify(xs);
  CHECK(rep.verdict == Verdict::ShotNoise);
  CHECK(rep.index == doctest::Approx(2.0).epsilon(0.15));
  CHECK(rep.method == DiagnosisMethod::FromSamples);

  // never a power-law call for the log-Cauchy, over several seeds
  for (uint64_t seed : {101, 102, 103, 104}) {
    auto lc = classify(draw(NamedLaw::log_cauchy(), 100000, seed));
    CAPTURE(seed);
    CHECK(lc.verdict != Verdict::ShotNoise);
  }
  // and never a slow-variation call for laws with a genuine index
  for (uint64_t seed : {201, 202}) {
    for (const auto& law : {NamedLaw::gamma_law(0.5, 1.0), NamedLaw::positive_linnik(0.5, 1.0),
                            NamedLaw::half_cauchy()}) {
      auto rep2 = classify(draw(law, 30000, seed));
      CAPTURE(law.describe());
      CHECK(rep2.verdict != Verdict::NotSD_SlowVariation);
    }
  }
}

TEST_CASE("index recovery from stationary shot-noise samples") {
  for (double rho : {0.5, 1.0, 2.0}) {
    auto m = ShotNoiseModel(rho, NamedLaw::exponential(1.0),
                            ResponseFunction::exponential(1.0));
    RandomStream rng(8800 + uint64_t(10 * rho));
    auto xs = sample_stationary(m, 100000, 1e-5, rng);
    auto e = rv_index_at_zero(xs);
    CAPTURE(rho);
    CHECK(std::fabs(e.value - rho) < 0.15 * rho);
  }
}

TEST_CASE("index estimates agree across methods for the gamma family") {
  for (double rho : {0.5, 1.0, 2.0}) {
    auto law = NamedLaw::gamma_law(rho, 1.0);
    auto from_cdf = rv_index_at_zero([&](double x) { return law.cdf(x); });
    auto from_lt = rv_index_from_lt(LaplaceTransform::of_law(law));
    auto from_samples = rv_index_at_zero(draw(law, 100000, 9900 + uint64_t(10 * rho)));
    CAPTURE(rho);
    CHECK(std::fabs(from_cdf.value - from_lt.value) <=
          std::max(width(from_cdf), width(from_lt)));
    CHECK(std::fabs(from_samples.value - from_lt.value) <=
          std::max(width(from_samples), width(from_lt)));
    CHECK(std::fabs(from_samples.value - from_cdf.value) <=
          std::max(width(from_samples), width(from_cdf)));
  }
}
