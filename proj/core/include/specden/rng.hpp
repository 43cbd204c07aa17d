#pragma once

#include <cstdint>

namespace specden::rng {

// splitmix64 finalizer (Vigna / Steele-Lea-Flood). Bijective on 64-bit words.
constexpr std::uint64_t mix64(std::uint64_t z) {
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

constexpr std::uint64_t kGolden = 0x9E3779B97F4A7C15ULL;
constexpr std::uint64_t kDimSalt = 0xD1B54A32D192ED03ULL;

// Counter-based stream keyed on (seed, stream). Values are pure functions of
// (key, index, dim), so draws are identical no matter in which order, or on
// how many threads, they are produced.
class CounterStream {
 public:
  CounterStream(std::uint64_t seed, std::uint64_t stream)
      : key_(mix64(mix64(seed + kGolden) ^ (kGolden * (stream + 1)))) {}

  std::uint64_t word(std::uint64_t index, std::uint64_t dim = 0) const {
    return mix64(key_ ^ mix64(index + kDimSalt * (dim + 1)));
  }

  // uniform in [0, 1), 53 significant bits
  double uniform(std::uint64_t index, std::uint64_t dim = 0) const {
    return static_cast<double>(word(index, dim) >> 11) * 0x1.0p-53;
  }

 private:
  std::uint64_t key_;
};

}  // namespace specden::rng
