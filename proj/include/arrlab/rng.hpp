#pragma once

#include <cmath>
#include <cstdint>

namespace arrlab {

inline uint64_t splitmix64(uint64_t x) {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

/// Counter-based generator: every variate is a pure function of
/// (seed, stream, index, slot), so partitioning work across threads cannot
/// change the sampled values. Gaussians use one Box-Muller evaluation per
/// slot from a fixed pair of uniforms.
class CounterRng {
 public:
  CounterRng(uint64_t seed, uint64_t stream)
      : key_(splitmix64(splitmix64(seed) ^ (0xD1B54A32D192ED03ULL * (stream + 1)))) {}

  uint64_t bits(uint64_t index, uint32_t slot) const {
    return splitmix64(splitmix64(key_ + 0x9E3779B97F4A7C15ULL * index) + slot);
  }

  /// Strictly inside (0,1): 53-bit mantissa offset by half a step.
  double uniform(uint64_t index, uint32_t slot) const {
    return (static_cast<double>(bits(index, slot) >> 11) + 0.5) * 0x1.0p-53;
  }

  double gaussian(uint64_t index, uint32_t slot) const {
    const double u1 = uniform(index, 2 * slot);
    const double u2 = uniform(index, 2 * slot + 1);
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(6.283185307179586476925286766559 * u2);
  }

 private:
  uint64_t key_;
};

}  // namespace arrlab
