// Acceptance gate: every release criterion as one pass/fail line, run as a
// single binary. argv[1] is the CLI executable, used by the determinism
// criterion. Exit status 0 means every criterion passed.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdarg>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "snoise/diagnostics.hpp"
#include "snoise/laplace.hpp"
#include "snoise/laws.hpp"
#include "snoise/quadrature.hpp"
#include "snoise/random.hpp"
#include "snoise/shot_noise.hpp"

using namespace snoise;

namespace {

int g_failures = 0;

void report(int number, const char* title, bool pass, const std::string& detail) {
  std::printf("%s  %2d %s: %s\n", pass ? "PASS" : "FAIL", number, title, detail.c_str());
  if (!pass) ++g_failures;
}

std::string fmt(const char* f, ...) {
  char buf[256];
  va_list ap;
  va_start(ap, f);
  std::vsnprintf(buf, sizeof buf, f, ap);
  va_end(ap);
  return buf;
}

std::vector<double> log_grid(double lo, double hi, int n) {
  std::vector<double> g(n);
  for (int i = 0; i < n; ++i) g[i] = lo * std::pow(hi / lo, double(i) / double(n - 1));
  return g;
}

double max_lt_gap(const LaplaceTransform& a, const LaplaceTransform& b,
                  const std::vector<double>& grid) {
  double worst = 0.0;
  for (double s : grid) worst = std::max(worst, std::fabs(a.phi(s) - b.phi(s)));
  return worst;
}

ShotNoiseModel exp_model(double lambda) {
  return ShotNoiseModel(lambda, NamedLaw::exponential(1.0), ResponseFunction::exponential(1.0));
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

// 1. lambda = 2, omega = 1, Exp(1) jumps: 1e5 stationary samples match
//    Gamma(2,1) under KS at the 99% band, in under 30 s.
void criterion_gamma_reproduction() {
  const std::size_t n = 100000;
  auto t0 = std::chrono::steady_clock::now();
  RandomStream rng(11, 0);
  auto xs = sample_stationary(exp_model(2.0), n, 1e-4, rng);
  double elapsed = seconds_since(t0);
  auto law = NamedLaw::gamma_law(2.0, 1.0);
  double d = ks_distance(xs, [&](double x) { return law.cdf(x); });
  double band = 1.63 / std::sqrt(double(n));
  bool pass = d < band && elapsed < 30.0;
  report(1, "gamma reproduction from exponential jumps", pass,
         fmt("ks=%.6f band=%.6f time=%.1fs", d, band, elapsed));
}

// 2. SD law <-> driving process roundtrip to 1e-6 on a 40-point log grid,
//    for the gamma and Linnik transforms, in under 5 s.
void criterion_bdlp_roundtrip() {
  auto t0 = std::chrono::steady_clock::now();
  auto grid = log_grid(0.01, 100.0, 40);
  auto phi_g = LaplaceTransform::of_law(NamedLaw::gamma_law(1.0, 1.0));
  auto phi_l = LaplaceTransform::of_law(NamedLaw::positive_linnik(0.5, 1.0));
  double g1 = max_lt_gap(sd_from_bdlp(bdlp_from_sd(phi_g)), phi_g, grid);
  double g2 = max_lt_gap(sd_from_bdlp(bdlp_from_sd(phi_l)), phi_l, grid);
  double elapsed = seconds_since(t0);
  bool pass = g1 < 1e-6 && g2 < 1e-6 && elapsed < 5.0;
  report(2, "transform/driving-process roundtrip", pass,
         fmt("gamma=%.2e linnik=%.2e bound=1e-6 time=%.1fs", g1, g2, elapsed));
}

// 3. The positive Linnik transform is generated by itself.
void criterion_linnik_self_generation() {
  auto phi = LaplaceTransform::of_law(NamedLaw::positive_linnik(0.5, 1.0));
  double gap = max_lt_gap(jump_lt_from_sn(phi, 0.5), phi, log_grid(0.01, 100.0, 20));
  report(3, "Linnik self-generation", gap < 1e-6, fmt("max-gap=%.2e bound=1e-6", gap));
}

// 4. Linnik tail ratio at x = 1e4 is within 10% of beta^2 / 2 for rho = 0.5.
void criterion_tail_ratio() {
  double r1 = linnik_tail_ratio(0.5, 1.0, 1e4);
  double r2 = linnik_tail_ratio(0.5, 2.0, 1e4);
  bool pass = std::fabs(r1 - 0.5) < 0.05 && std::fabs(r2 - 2.0) < 0.2;
  report(4, "Linnik tail-ratio limits", pass,
         fmt("beta1: %.4f vs 0.5, beta2: %.4f vs 2.0 (10%%)", r1, r2));
}

// 5. Index recovery end to end: stationary samples at rate ratio rho give
//    back rho within 15%, for rho in {0.5, 1, 2}, n = 1e5.
void criterion_index_recovery() {
  const std::size_t n = 100000;
  bool pass = true;
  std::string detail;
  int stream = 0;
  for (double rho : {0.5, 1.0, 2.0}) {
    RandomStream rng(31, std::uint64_t(stream++));
    // The near-zero scan resolves depths down to roughly the smallest order
    // statistic, (1/n)^{1/rho}; series truncation must sit far below that or
    // it flattens the apparent slope.
    auto xs = sample_stationary(exp_model(rho), n, 1e-12, rng);
    auto est = rv_index_at_zero(xs);
    double rel = std::fabs(est.value - rho) / rho;
    pass = pass && rel < 0.15;
    detail += fmt("%s%.3g->%.3g (%.0f%%)", detail.empty() ? "" : ", ", rho, est.value,
                  100.0 * rel);
  }
  report(5, "stationary index recovery within 15%", pass, detail);
}

// 6. Gamma subordinated to gamma: local transform index below 0.1 at s = 1e6
//    and the classifier calls it slowly varying (not selfdecomposable).
void criterion_subordination() {
  auto g = LaplaceTransform::of_law(NamedLaw::gamma_law(1.0, 1.0));
  auto phi3 = subordinate(g, g);
  double li = phi3.local_index(1e6);
  auto rep = classify(phi3);
  bool pass = li < 0.1 && rep.verdict == Verdict::NotSD_SlowVariation;
  report(6, "subordinated gamma is slowly varying", pass,
         fmt("local-index=%.4f verdict=%s", li, to_string(rep.verdict)));
}

// 7. Existence criteria return exactly the stated verdicts.
void criterion_existence() {
  using St = ConvergenceVerdict::Status;
  auto status = [](ShotNoiseModel m) { return existence_check(m).status; };
  bool pass =
      status({1.0, NamedLaw::log_pareto(), ResponseFunction::exponential(1.0)}) ==
          St::Diverges &&
      status({1.0, NamedLaw::gamma_law(2.0, 1.0), ResponseFunction::exponential(1.0)}) ==
          St::Converges &&
      status({1.0, NamedLaw::burr(0.5, 1.0, 1.0), ResponseFunction::power(2.0)}) ==
          St::Diverges &&
      status({1.0, NamedLaw::exponential(1.0), ResponseFunction::power(2.0)}) ==
          St::Converges &&
      status({1.0, NamedLaw::positive_stable(0.5), ResponseFunction::indicator(0.0, 1.0)}) ==
          St::Converges;
  report(7, "existence criteria verdicts", pass, pass ? "5/5 exact" : "mismatch");
}

// 8. Numeric inversion of the Bessel-type transform at rho = 1 matches direct
//    quadrature of its density to 1e-4 at 20 points in [0.1, 10].
void criterion_bessel_inversion() {
  auto law = NamedLaw::bessel(1.0);
  auto phi = LaplaceTransform::of_law(law);
  double worst = 0.0;
  for (double x : log_grid(0.1, 10.0, 20)) {
    double by_quadrature = integrate([&](double u) { return law.pdf(u); }, 0.0, x);
    worst = std::max(worst, std::fabs(invert_lt_cdf(phi, x) - by_quadrature));
  }
  report(8, "Bessel transform inversion vs density quadrature", worst < 1e-4,
         fmt("max-error=%.2e bound=1e-4", worst));
}

// 9. The ratio of two independent positive 1/2-stable draws follows
//    (2/pi) arctan sqrt(x), KS-checked at the 99% band.
void criterion_stable_ratio() {
  const std::size_t n = 100000;
  RandomStream rng(13, 0);
  std::vector<double> xs(n);
  for (auto& x : xs) {
    double a = rng.stable_positive(0.5), b = rng.stable_positive(0.5);
    x = a / b;
  }
  constexpr double pi = 3.14159265358979323846;
  double d = ks_distance(xs, [&](double x) { return (2.0 / pi) * std::atan(std::sqrt(x)); });
  double band = ks_band(n);
  report(9, "stable-ratio arctan law", d < band, fmt("ks=%.6f band=%.6f", d, band));
}

// 10. The stationary law is a fixed point of X -> U^(omega/lambda) (X + xi).
void criterion_fixed_point() {
  const std::size_t n = 100000;
  bool pass = true;
  std::string detail;
  int which = 0;
  for (double rho : {0.5, 1.0, 2.0}) {
    auto m = exp_model(rho);
    RandomStream ra(14, std::uint64_t(4 * which)), rb(14, std::uint64_t(4 * which + 1));
    RandomStream rj(14, std::uint64_t(4 * which + 2)), ru(14, std::uint64_t(4 * which + 3));
    auto xs = sample_stationary(m, n, 1e-4, ra);
    auto ys = sample_stationary(m, n, 1e-4, rb);
    auto jump_law = NamedLaw::exponential(1.0);
    for (auto& y : ys) y = std::pow(ru.uniform(), 1.0 / rho) * (y + jump_law.sample(rj));
    double d = ks_distance(xs, ys);
    pass = pass && d < ks_band(n, n);
    detail += fmt("%srho=%.2g ks=%.4f", detail.empty() ? "" : ", ", rho, d);
    ++which;
  }
  report(10, "distributional fixed point", pass,
         detail + fmt(" band=%.4f", ks_band(n, n)));
}

// 11. Unimodality at zero for rate ratio 0.5: binned stationary counts never
//     rise by more than three sigma.
void criterion_unimodality() {
  const std::size_t n = 100000;
  RandomStream rng(26, 0);
  auto xs = sample_stationary(exp_model(0.5), n, 1e-4, rng);
  std::sort(xs.begin(), xs.end());
  double q99 = xs[std::size_t(0.99 * double(n))];
  const int bins = 50;
  std::vector<double> counts(bins, 0.0);
  for (double x : xs)
    if (x < q99) counts[std::size_t(double(bins) * x / q99)] += 1.0;
  double worst = -1e300;
  for (int i = 0; i + 1 < bins; ++i)
    worst = std::max(worst, counts[i + 1] - counts[i] - 3.0 * std::sqrt(counts[i] + 1.0));
  report(11, "stationary histogram nonincreasing", worst <= 0.0,
         fmt("max-rise-margin=%.1f bound=0", worst));
}

std::string slurp(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  std::ostringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

// 12. Equal seeds give byte-identical CLI output.
void criterion_cli_determinism(const char* cli) {
  if (!cli) {
    report(12, "CLI determinism", false, "no CLI path given (pass it as argv[1])");
    return;
  }
  std::string dir = "acceptance_tmp";
  std::string spec = dir + "/spec.json";
  std::string run = "mkdir -p " + dir;
  if (std::system(run.c_str()) != 0) {
    report(12, "CLI determinism", false, "cannot create work dir");
    return;
  }
  {
    std::ofstream f(spec);
    f << "{\"model\": {\"lambda\": 2.0, \"jumps\": {\"kind\": \"Exponential\", "
         "\"params\": {\"beta\": 1.0}}, \"response\": {\"kind\": \"Exponential\", "
         "\"omega\": 1.0}}, \"n\": 5000, \"tol\": 1e-4, \"seed\": 42}\n";
  }
  std::string base = std::string(cli) + " sample --spec " + spec;
  int rc1 = std::system((base + " --out " + dir + "/a.csv").c_str());
  int rc2 = std::system((base + " --out " + dir + "/b.csv").c_str());
  int rc3 = std::system((base + " --seed 43 --out " + dir + "/c.csv").c_str());
  std::string a = slurp(dir + "/a.csv"), b = slurp(dir + "/b.csv"), c = slurp(dir + "/c.csv");
  bool pass = rc1 == 0 && rc2 == 0 && rc3 == 0 && !a.empty() && a == b && a != c;
  report(12, "CLI determinism", pass,
         fmt("%zu bytes, equal-seed runs %s, distinct-seed run %s", a.size(),
             a == b ? "identical" : "DIFFER", a != c ? "differs" : "IDENTICAL"));
}

}  // namespace

int main(int argc, char** argv) {
  criterion_gamma_reproduction();
  criterion_bdlp_roundtrip();
  criterion_linnik_self_generation();
  criterion_tail_ratio();
  criterion_index_recovery();
  criterion_subordination();
  criterion_existence();
  criterion_bessel_inversion();
  criterion_stable_ratio();
  criterion_fixed_point();
  criterion_unimodality();
  criterion_cli_determinism(argc > 1 ? argv[1] : nullptr);
  std::printf("%d/12 criteria passed\n", 12 - g_failures);
  return g_failures == 0 ? 0 : 1;
}
