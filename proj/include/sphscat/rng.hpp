// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <random>

namespace sphscat {

// Deterministic random stream built on std::mt19937_64, whose output sequence
// is fully specified by the standard. A (seed, stream) pair selects an
// independent stream; workers of a parallel Monte-Carlo job each get their own
// stream id, which makes results reproducible for a fixed (seed, worker count).
//
// All variate generators are implemented here rather than through
// std::*_distribution so the draw sequence does not depend on the standard
// library version.
class RandomStream {
 public:
  explicit RandomStream(std::uint64_t seed, std::uint64_t stream = 0);

  std::uint64_t next_u64() { return engine_(); }

  // Uniform on [0, 1).
  double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

  // Uniform on (0, 1); safe as an argument of log().
  double uniform_pos() {
    return (static_cast<double>(engine_() >> 11) + 0.5) * 0x1.0p-53;
  }

  double normal();
  double exponential() { return -std::log(uniform_pos()); }

  // Gamma(shape, scale 1), shape > 0. Marsaglia-Tsang squeeze method.
  double gamma(double shape);

  // Beta(a, b), a, b > 0.
  double beta(double a, double b);

  // Poisson(mean), mean >= 0. Inversion by uniform products for small means,
  // transformed rejection (PTRS) for large ones. Exact in both regimes.
  long poisson(double mean);

 private:
  std::mt19937_64 engine_;
  double spare_normal_ = 0.0;
  bool has_spare_ = false;
};

}  // namespace sphscat
