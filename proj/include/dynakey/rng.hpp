#pragma once

#include <cmath>
#include <cstdint>

namespace dynakey {

/// SplitMix64 finalizer. Bijective on 64-bit integers.
inline uint64_t mix64(uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

/// Counter-based generator keyed by (seed, stream, substream). Draws depend
/// only on the key and the draw index, never on what other generators did,
/// so per-frame and per-entity generation stay order-independent.
class Rng {
 public:
  explicit Rng(uint64_t key) : key_(key) {}

  static Rng keyed(uint64_t seed, uint64_t a, uint64_t b = 0, uint64_t c = 0) {
    uint64_t k = mix64(seed);
    k = mix64(k ^ a);
    k = mix64(k ^ b);
    k = mix64(k ^ c);
    return Rng(k);
  }

  uint64_t next_u64() { return mix64(key_ ^ (0x9e3779b97f4a7c15ULL * ++counter_)); }

  /// Uniform double in [0, 1).
  double next_double() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

  double uniform(double lo, double hi) { return lo + (hi - lo) * next_double(); }

  /// Uniform integer in [0, n). n must be > 0.
  uint64_t below(uint64_t n) { return next_u64() % n; }

  /// Standard normal via Box-Muller. Two draws per call, no cached spare.
  double normal() {
    double u1 = (static_cast<double>(next_u64() >> 11) + 1.0) * 0x1.0p-53;  // (0, 1]
    double u2 = next_double();
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(6.283185307179586476925286766559 * u2);
  }

  double normal(double mean, double sigma) { return mean + sigma * normal(); }

 private:
  uint64_t key_;
  uint64_t counter_ = 0;
};

}  // namespace dynakey
