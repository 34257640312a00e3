#pragma once

#include <cstdint>

namespace zonoforge {

/// Counter-based generator "splitmix64-counter-v1".
///
/// Draw j of block b under seed S is
///   key = mix(S + (b + 1) * 0x9E3779B97F4A7C15)
///   u   = (mix(key ^ (j * 0xD1B54A32D192ED03)) >> 11) * 2^-53
/// where mix is the splitmix64 finalizer. Output depends only on (S, b, j).
inline std::uint64_t splitmix64(std::uint64_t z) {
  z += 0x9E3779B97F4A7C15ULL;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

class CounterRng {
public:
  static constexpr const char* kName = "splitmix64-counter-v1";

  CounterRng(std::uint64_t seed, std::uint64_t block)
      : key_(splitmix64(seed + (block + 1) * 0x9E3779B97F4A7C15ULL)) {}

  std::uint64_t bits(std::uint64_t j) const { return splitmix64(key_ ^ (j * 0xD1B54A32D192ED03ULL)); }
  /// Uniform in [0, 1) with 53 random bits.
  double uniform(std::uint64_t j) const { return static_cast<double>(bits(j) >> 11) * 0x1.0p-53; }

private:
  std::uint64_t key_;
};

}  // namespace zonoforge
