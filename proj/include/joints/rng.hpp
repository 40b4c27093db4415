#pragma once

#include <cstdint>

namespace joints {

/// SplitMix64: the i-th output (i = 1, 2, ...) is mix(seed + i * 0x9E3779B97F4A7C15)
/// with the standard SplitMix64 finalizer. Counter-based, so any language can
/// reproduce a stream from the seed alone.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ull);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
  }

  /// Uniform in [0, bound) by rejection: draws x until x >= 2^64 mod bound,
  /// then returns x mod bound.
  std::uint64_t below(std::uint64_t bound) {
    const std::uint64_t threshold = (0 - bound) % bound;
    while (true) {
      std::uint64_t x = next();
      if (x >= threshold) return x % bound;
    }
  }

 private:
  std::uint64_t state_;
};

}  // namespace joints
