#pragma once

#include <cstdint>

namespace flatkit {

// SplitMix64: 64-bit state, one multiply-xor-shift chain per draw.
// Integer-only, so identical (seed, draw index) gives identical output on
// every platform. fork(k) derives an independent stream for task k.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

  // Uniform in [0, 1) with 53 random bits.
  double next_double() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

  // Uniform sign in {-1, +1}.
  int next_sign() { return (next() >> 63) ? -1 : +1; }

  // Uniform integer in [0, n).
  std::uint64_t next_below(std::uint64_t n) { return next() % n; }

  SplitMix64 fork(std::uint64_t stream) const {
    SplitMix64 g(state_ ^ (0xA3EC647659359ACDULL + stream * 0x9E3779B97F4A7C15ULL));
    g.next();
    return g;
  }

 private:
  std::uint64_t state_;
};

}  // namespace flatkit
