#pragma once

#include <cstdint>

namespace jamesian {

/// The 64-bit finalizer used by splitmix64.
inline std::uint64_t mix64(std::uint64_t z) noexcept {
  z ^= z >> 30;
  z *= 0xbf58476d1ce4e5b9ull;
  z ^= z >> 27;
  z *= 0x94d049bb133111ebull;
  z ^= z >> 31;
  return z;
}

/// splitmix64: the fixed pseudorandom generator used for every Monte
/// Carlo trial. State advances by the golden-ratio increment and is
/// finalized by mix64.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) noexcept : state_(seed) {}

  std::uint64_t next() noexcept {
    state_ += 0x9e3779b97f4a7c15ull;
    return mix64(state_);
  }

  /// Uniform double in [0, 1), 53 random bits.
  double uniform() noexcept { return (next() >> 11) * 0x1.0p-53; }

 private:
  std::uint64_t state_;
};

/// Initial state for the substream assigned to one trial. Substreams
/// depend only on (seed, index), so trial outcomes are independent of
/// iteration order.
inline std::uint64_t substream_seed(std::uint64_t seed,
                                    std::uint64_t index) noexcept {
  return mix64(mix64(seed ^ 0x2545f4914f6cdd1dull) +
               index * 0x9e3779b97f4a7c15ull);
}

}  // namespace jamesian
