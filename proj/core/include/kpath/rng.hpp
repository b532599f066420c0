#pragma once

#include <cstdint>

namespace kpath {

// splitmix64 finalizer. This is the one 64-bit mixing function used for all
// seed derivation in the library, so a run is reproducible from its master
// seed alone.
constexpr std::uint64_t mix64(std::uint64_t z) {
  z ^= z >> 30;
  z *= 0xBF58476D1CE4E5B9ull;
  z ^= z >> 27;
  z *= 0x94D049BB133111EBull;
  z ^= z >> 31;
  return z;
}

constexpr std::uint64_t kGolden = 0x9E3779B97F4A7C15ull;

// Deterministic stream of 64-bit values (splitmix64).
class SplitMix64 {
 public:
  constexpr explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  constexpr std::uint64_t next() {
    state_ += kGolden;
    return mix64(state_);
  }

  constexpr std::uint64_t state() const { return state_; }

 private:
  std::uint64_t state_;
};

// Seed for the index-th child stream of a master seed; equals the
// (index+1)-th output of SplitMix64(master).
constexpr std::uint64_t derive_seed(std::uint64_t master, std::uint64_t index) {
  return mix64(master + kGolden * (index + 1));
}

}  // namespace kpath
