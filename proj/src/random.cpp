#include "snoise/random.hpp"

#include <cmath>
#include <stdexcept>

namespace snoise {

namespace {

// splitmix64 finalizer; used to spread (seed, stream) into engine state.
std::uint64_t mix64(std::uint64_t z) {
  z += 0x9e3779b97f4a7c15ULL;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

constexpr double kPi = 3.14159265358979323846;

}  // namespace

RandomStream::RandomStream(std::uint64_t seed, std::uint64_t stream)
    : gen_(mix64(mix64(seed) ^ mix64(stream * 0x9e3779b97f4a7c15ULL + 1))) {}

double RandomStream::uniform() {
  // 53-bit mantissa, offset by half an ulp so 0 and 1 are unreachable.
  return (static_cast<double>(gen_() >> 11) + 0.5) * 0x1.0p-53;
}

std::uint64_t RandomStream::next_u64() { return gen_(); }

double RandomStream::exponential(double rate) {
  if (!(rate > 0)) throw std::domain_error("exponential: rate must be positive");
  return -std::log(uniform()) / rate;
}

double RandomStream::normal() {
  double u1 = uniform();
  double u2 = uniform();
  return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * kPi * u2);
}

double RandomStream::gamma_variate(double shape, double rate) {
  if (!(shape > 0) || !(rate > 0))
    throw std::domain_error("gamma_variate: shape and rate must be positive");
  if (shape < 1.0) {
    // Boost by one and thin with a uniform power.
    double g = gamma_variate(shape + 1.0, 1.0);
    return g * std::pow(uniform(), 1.0 / shape) / rate;
  }
  double d = shape - 1.0 / 3.0;
  double c = 1.0 / std::sqrt(9.0 * d);
  for (;;) {
    double x = normal();
    double t = 1.0 + c * x;
    if (t <= 0.0) continue;
    double v = t * t * t;
    double u = uniform();
    double x2 = x * x;
    if (u < 1.0 - 0.0331 * x2 * x2) return d * v / rate;
    if (std::log(u) < 0.5 * x2 + d * (1.0 - v + std::log(v))) return d * v / rate;
  }
}

std::uint64_t RandomStream::poisson(double mean) {
  if (mean < 0) throw std::domain_error("poisson: mean must be nonnegative");
  if (mean == 0) return 0;
  std::uint64_t k = 0;
  double t = exponential();
  while (t <= mean) {
    ++k;
    t += exponential();
  }
  return k;
}

double RandomStream::stable_positive(double alpha) {
  if (!(alpha > 0) || alpha > 1.0)
    throw std::domain_error("stable_positive: alpha must lie in (0, 1]");
  if (alpha == 1.0) return 1.0;
  // Kanter: X = (a(theta)/W)^{(1-alpha)/alpha} with theta uniform on (0, pi),
  // W unit exponential, gives E exp(-s X) = exp(-s^alpha). Logs for stability.
  double theta = kPi * uniform();
  double w = exponential();
  double la = (alpha / (1.0 - alpha)) * std::log(std::sin(alpha * theta)) +
              std::log(std::sin((1.0 - alpha) * theta)) -
              (1.0 / (1.0 - alpha)) * std::log(std::sin(theta));
  return std::exp(((1.0 - alpha) / alpha) * (la - std::log(w)));
}

}  // namespace snoise
