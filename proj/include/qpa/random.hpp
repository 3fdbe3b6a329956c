#pragma once

#include <cstdint>

namespace qpa {

// splitmix64 stream. Trial substreams are derived by hashing (seed, trial),
// so a trial's draws depend only on those two values and never on worker
// scheduling. The state sequence is a fixed-increment counter, making replay
// trivial.
class RandomStream {
 public:
  explicit RandomStream(uint64_t seed) : state_(seed) {}

  static RandomStream for_trial(uint64_t seed, uint64_t trial) {
    return RandomStream(mix(mix(seed) + 0x9E3779B97F4A7C15ULL * (trial + 1)));
  }

  uint64_t next() {
    uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

  // Uniform double in [0, 1) with 53 random bits.
  double next_unit() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

 private:
  static uint64_t mix(uint64_t z) {
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

  uint64_t state_;
};

}  // namespace qpa
