#pragma once

#include <cstdint>
#include <random>

namespace ffcs {

inline std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ull;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
  return x ^ (x >> 31);
}

/// Deterministic generator: std::mt19937_64 seeded with splitmix64(seed).
///
/// Only the raw 64-bit engine output is used; the integer and real
/// draws below are implemented here rather than through <random>
/// distributions, whose algorithms vary between standard libraries.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(splitmix64(seed)) {}

  /// Stream for trial `index` under `master_seed`:
  /// seed = splitmix64(master_seed) XOR splitmix64(index + 1).
  /// Streams depend only on (master_seed, index), so trials can be run
  /// in any order or on any worker.
  static Rng substream(std::uint64_t master_seed, std::uint64_t index) {
    return Rng(splitmix64(master_seed) ^ splitmix64(index + 1));
  }

  std::uint64_t next() { return engine_(); }

  /// Uniform integer in [0, bound), bound >= 1 (Lemire's method).
  std::uint64_t uniform_below(std::uint64_t bound) {
    unsigned __int128 m = static_cast<unsigned __int128>(next()) * bound;
    auto low = static_cast<std::uint64_t>(m);
    if (low < bound) {
      const std::uint64_t threshold = -bound % bound;
      while (low < threshold) {
        m = static_cast<unsigned __int128>(next()) * bound;
        low = static_cast<std::uint64_t>(m);
      }
    }
    return static_cast<std::uint64_t>(m >> 64);
  }

  /// Uniform double in [0, 1) with 53 random bits.
  double uniform01() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

 private:
  std::mt19937_64 engine_;
};

}  // namespace ffcs
