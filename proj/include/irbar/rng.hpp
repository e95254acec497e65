#pragma once

#include <cstdint>

#include "irbar/irbar.hpp"

namespace irbar {

/// SplitMix64 stream keyed by (seed, index): sample i draws the same values
/// no matter which thread evaluates it or in what order.
class CounterRng {
 public:
  CounterRng(std::uint64_t seed, std::uint64_t index)
      : state_(mix(seed ^ mix(index + 0x632be59bd9b4e019ULL))) {}

  std::uint64_t next() {
    state_ += 0x9e3779b97f4a7c15ULL;
    return mix(state_);
  }

  /// Uniform in [lo, hi] from the top 53 bits.
  double uniform(double lo, double hi) {
    const double t = static_cast<double>(next() >> 11) * 0x1.0p-53;
    return lo + (hi - lo) * t;
  }

  static std::uint64_t mix(std::uint64_t z) {
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

 private:
  std::uint64_t state_;
};

enum class SampleKind { Pos, Zero, Neg, Improper };

/// Class with endpoints in [-bound, bound] of the given kind.
Interval sample_class(CounterRng& rng, SampleKind kind, double bound = 10.0);

/// Kind chosen uniformly among the four (25% each).
Interval sample_class(CounterRng& rng, double bound = 10.0);

/// Proper class only (POS, ZERO or NEG, equally likely).
Interval sample_proper(CounterRng& rng, double bound = 10.0);

}  // namespace irbar
