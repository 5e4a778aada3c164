// SPDX-License-Identifier: Apache-2.0
//
// Fixed, versioned randomness stack: SplitMix64 for key mixing and seeding,
// xoshiro256++ 1.0 for the uniform stream, Marsaglia's polar method for
// Gaussians. Changing any of these invalidates golden files.

#pragma once

#include <array>
#include <cmath>
#include <cstdint>

namespace relaysim {

/// One SplitMix64 step (Steele/Lea/Flood constants): advances state, returns
/// the mixed output.
inline std::uint64_t splitmix64_next(std::uint64_t& state) noexcept {
  state += 0x9e3779b97f4a7c15ull;
  std::uint64_t z = state;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
  return z ^ (z >> 31);
}

/// Folds one word into a running key. For fixed key the map word -> result is
/// a bijection on 64-bit values, so distinct realization indices can never
/// collapse onto one stream.
inline std::uint64_t mix_word(std::uint64_t key, std::uint64_t word) noexcept {
  std::uint64_t s = key ^ word;
  return splitmix64_next(s);
}

/// xoshiro256++ 1.0 (Blackman & Vigna), state expanded from one 64-bit seed
/// through SplitMix64 as the reference implementation recommends.
class Xoshiro256pp {
 public:
  explicit Xoshiro256pp(std::uint64_t seed) noexcept {
    for (auto& word : state_) word = splitmix64_next(seed);
  }

  std::uint64_t next() noexcept {
    const std::uint64_t result = rotl(state_[0] + state_[3], 23) + state_[0];
    const std::uint64_t t = state_[1] << 17;
    state_[2] ^= state_[0];
    state_[3] ^= state_[1];
    state_[1] ^= state_[2];
    state_[0] ^= state_[3];
    state_[2] ^= t;
    state_[3] = rotl(state_[3], 45);
    return result;
  }

  /// Uniform in [0,1) with 53 significant bits.
  double next_unit() noexcept { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

 private:
  static constexpr std::uint64_t rotl(std::uint64_t x, int k) noexcept {
    return (x << k) | (x >> (64 - k));
  }
  std::array<std::uint64_t, 4> state_{};
};

struct NormalPair {
  double first;
  double second;
};

/// Two independent standard normals via the polar method. Inverse-free; the
/// only libm calls are sqrt and log.
inline NormalPair standard_normal_pair(Xoshiro256pp& rng) noexcept {
  for (;;) {
    const double u = 2.0 * rng.next_unit() - 1.0;
    const double v = 2.0 * rng.next_unit() - 1.0;
    const double s = u * u + v * v;
    if (s >= 1.0 || s == 0.0) continue;
    const double f = std::sqrt(-2.0 * std::log(s) / s);
    return {u * f, v * f};
  }
}

}  // namespace relaysim
