#pragma once

#include <cstdint>

namespace isol1 {

// Counter-based pseudorandom scheme (splitmix64 finalizer). Deterministic
// across platforms, which keeps generated corpora byte-stable; the standard
// distributions are implementation-defined and unsuitable for that.
inline std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ull;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
  return x ^ (x >> 31);
}

/// k-th variate of the stream keyed by seed, uniform in [0, 1).
inline double unit_uniform(std::uint64_t seed, std::uint64_t k) {
  const std::uint64_t bits = splitmix64(splitmix64(seed) + k);
  return static_cast<double>(bits >> 11) * (1.0 / 9007199254740992.0);
}

}  // namespace isol1
