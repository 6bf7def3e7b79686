#pragma once

#include <cstdint>

namespace gaugekit {

/// SplitMix64 (Steele, Lea, Flood 2014). Hand-rolled because the standard
/// distributions are not bit-stable across platforms and the reports promise
/// byte-identical output for a fixed seed. The u64 -> double mapping takes
/// the top 53 bits, giving uniforms in [0, 1).
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    state_ += 0x9E3779B97F4A7C15ull;
    std::uint64_t z = state_;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
  }

  double uniform01() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform01(); }

  bool coin() { return (next() & 1ull) != 0; }

  /// Uniform in {0, .., n-1}; modulo bias is irrelevant at the tiny n used
  /// here and the mapping must stay frozen for reproducibility.
  std::uint64_t below(std::uint64_t n) { return next() % n; }

 private:
  std::uint64_t state_;
};

/// Decorrelated per-trial seed: one SplitMix64 output of the stream index
/// folded into the campaign seed. Frozen; reports depend on it.
inline std::uint64_t trial_seed(std::uint64_t seed, std::uint64_t trial) {
  return SplitMix64(seed + 0x9E3779B97F4A7C15ull * (trial + 1)).next();
}

}  // namespace gaugekit
