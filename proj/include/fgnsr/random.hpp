#pragma once

#include <cstdint>
#include <random>
#include <vector>

namespace fgnsr {

// Seedable source with identical output on every platform: the engine is
// std::mt19937_64 (fully specified by the standard) and all derived draws
// are computed here instead of through <random> distributions, whose
// algorithms are implementation-defined.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }

  /// Uniform on [0, 1) with 53 random bits.
  double uniform() {
    return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
  }
  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

  /// Uniform integer in [0, bound), bound > 0; rejection sampling.
  std::uint64_t below(std::uint64_t bound);

  /// Standard normal by Box-Muller (no cached second value).
  double normal();

  /// Uniformly random permutation of 0..n-1 (Fisher-Yates).
  std::vector<std::int64_t> permutation(std::int64_t n);

 private:
  std::mt19937_64 engine_;
};

}  // namespace fgnsr
