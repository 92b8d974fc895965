#pragma once

#include <cstdint>
#include <random>

namespace snoise {

// Deterministic stream of variates. A single 64-bit root seed plus a stream
// index selects an independent substream; equal (seed, stream) pairs produce
// bit-identical sequences on a given build. All samplers draw through the
// uniform() primitive only, so the draw sequence is fully pinned down by this
// class and not by implementation-defined <random> distributions.
class RandomStream {
 public:
  explicit RandomStream(std::uint64_t seed, std::uint64_t stream = 0);

  // Uniform on the open interval (0, 1). Never returns 0 or 1.
  double uniform();

  std::uint64_t next_u64();

  // Exponential with the given rate (mean 1/rate).
  double exponential(double rate = 1.0);

  // Standard normal (Box-Muller, one value per two uniforms).
  double normal();

  // Gamma with given shape and rate (Marsaglia-Tsang).
  double gamma_variate(double shape, double rate = 1.0);

  // Poisson count by exponential accumulation; cost O(mean).
  std::uint64_t poisson(double mean);

  // Positive alpha-stable normalized so E exp(-s X) = exp(-s^alpha),
  // 0 < alpha <= 1 (alpha = 1 is the unit point mass). Kanter's method.
  double stable_positive(double alpha);

 private:
  std::mt19937_64 gen_;
};

// Factory for per-worker / per-sample substreams derived from one root seed.
class StreamFamily {
 public:
  explicit StreamFamily(std::uint64_t root) : root_(root) {}
  RandomStream stream(std::uint64_t index) const { return RandomStream(root_, index); }
  std::uint64_t root() const { return root_; }

 private:
  std::uint64_t root_;
};

}  // namespace snoise
