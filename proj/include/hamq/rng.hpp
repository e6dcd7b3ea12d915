#pragma once

#include <cstdint>
#include <stdexcept>

namespace hamq {

/// splitmix64 finalizer: full-avalanche 64-bit mix.
constexpr std::uint64_t mix64(std::uint64_t z) {
  z ^= z >> 30;
  z *= 0xBF58476D1CE4E5B9ull;
  z ^= z >> 27;
  z *= 0x94D049BB133111EBull;
  z ^= z >> 31;
  return z;
}

/// Counter-based splitmix64 stream. All output is platform-fixed (pure
/// 64-bit integer arithmetic), so replays are bit-exact everywhere.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    state_ += 0x9E3779B97F4A7C15ull;
    return mix64(state_);
  }

  /// Unbiased uniform draw from {0, ..., bound-1} by rejection.
  std::uint64_t below(std::uint64_t bound) {
    if (bound == 0) throw std::invalid_argument("Rng::below: bound must be positive");
    const std::uint64_t threshold = (std::uint64_t{0} - bound) % bound;
    for (;;) {
      const std::uint64_t r = next();
      if (r >= threshold) return r % bound;
    }
  }

 private:
  std::uint64_t state_;
};

/// Stream key for one trial of one grid point under a master seed.
/// Distinct (master, grid, trial) tuples map to decorrelated streams;
/// no global RNG exists anywhere in the library.
constexpr std::uint64_t derive_seed(std::uint64_t master, std::uint64_t grid_index,
                                    std::uint64_t trial_index) {
  std::uint64_t h = mix64(master ^ 0x8BADF00DDEADBEEFull);
  h = mix64(h ^ mix64(grid_index ^ 0xC0FFEE0123456789ull));
  h = mix64(h ^ mix64(trial_index ^ 0xD1B54A32D192ED03ull));
  return h;
}

/// Per-element substream key: fixes a lazily evaluated random function of
/// ids for a whole run (feature-space attacks, per-coordinate tie breaks).
constexpr std::uint64_t substream(std::uint64_t key, std::uint64_t x) {
  return mix64(key ^ mix64(x ^ 0x9E6C63D0876A9A35ull));
}

}  // namespace hamq
