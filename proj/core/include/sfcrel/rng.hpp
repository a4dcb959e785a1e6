#pragma once

#include <cstdint>
#include <random>

namespace sfcrel {

/// Seedable generator used by every stochastic routine in the library.
///
/// The engine is std::mt19937_64, whose output sequence is fixed by the C++
/// standard. The distributions are written out here rather than taken from
/// <random> because the standard leaves their algorithms to the vendor, and
/// results must not depend on which standard library built them.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }

  /// Uniform on [0, 1) with 53 random bits.
  double uniform01();

  /// Exponential with the given rate (> 0).
  double exponential(double rate);

  /// Uniform integer in [0, bound), bound > 0, without modulo bias.
  std::uint64_t below(std::uint64_t bound);

  /// Uniform integer in [lo, hi].
  int uniform_int(int lo, int hi);

  /// True with probability p.
  bool bernoulli(double p) { return uniform01() < p; }

 private:
  std::mt19937_64 engine_;
};

/// Derives an independent-looking seed for sub-stream `index` (splitmix64).
std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index);

}  // namespace sfcrel
