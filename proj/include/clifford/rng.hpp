#pragma once

#include <cmath>
#include <cstdint>
#include <random>

namespace clif {

/// Deterministic random stream used everywhere randomness is needed.
///
/// Built on std::mt19937_64 (whose output sequence is fixed by the standard)
/// with hand-rolled uniform and normal transforms, so the same seed yields
/// bit-identical doubles on every platform.  std::uniform_real_distribution
/// and friends are deliberately avoided: their algorithms are
/// implementation-defined.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : gen_(seed) {}

  /// Uniform in [0, 1) with 53 random bits.
  double uniform() { return double(gen_() >> 11) * 0x1.0p-53; }

  /// Uniform in [lo, hi).
  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

  /// Standard normal via Box-Muller.
  double normal() {
    double u1 = uniform();
    while (u1 == 0.0) u1 = uniform();
    const double u2 = uniform();
    return std::sqrt(-2.0 * std::log(u1)) *
           std::cos(2.0 * 3.14159265358979323846 * u2);
  }

  /// Integer in [0, n).
  std::uint64_t index(std::uint64_t n) { return gen_() % n; }

 private:
  std::mt19937_64 gen_;
};

/// Default seed for CLI runs and test corpora; overridable via --seed.
inline constexpr std::uint64_t kDefaultSeed = 0x5eed5eed5eedULL;

} // namespace clif
