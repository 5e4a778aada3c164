// SPDX-License-Identifier: Apache-2.0
//
// Fading-realization generator: line geometry, distance-based path loss, and
// i.i.d. circularly symmetric complex Gaussian entries with a deterministic
// per-realization seeding contract.

#pragma once

#include <cstdint>
#include <stdexcept>

#include "relaysim/matrix.hpp"

namespace relaysim {

class GeometryError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DimensionError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Minimum node separation; path loss 1/L^tau diverges as L -> 0.
inline constexpr double kEpsilonDist = 1e-3;

/// Nodes on a line: BS, RS, and the co-located users.
struct Geometry {
  double bs_pos = 0.0;
  double rs_pos = 0.25;
  double user_pos = 1.0;
  double tau = 3.0;

  void validate() const;
};

/// Antenna counts. Streams require K <= M_b; the supported configuration is
/// the square one, M_b == M_r == K.
struct Dimensions {
  std::size_t m_b = 4;
  std::size_t m_r = 4;
  std::size_t k = 4;

  void validate() const;
};

/// Per-link entry variances 1/L^tau.
struct VarianceProfile {
  double h1;  // BS -> users
  double g;   // BS -> RS
  double h2;  // RS -> users
};

/// (master_seed, realization_index) -> stream; the mapping is documented in
/// derive_stream_key and is injective in each argument.
struct SeedSpec {
  std::uint64_t master_seed = 1;
  std::uint64_t realization_index = 0;
};

/// One fading realization.
struct ChannelSet {
  ComplexMatrix h1;  // K x M_b   direct channel
  ComplexMatrix g;   // M_r x M_b backward channel
  ComplexMatrix h2;  // K x M_r   forward channel
  double noise_var = 1.0;
};

/// 1/L^tau for the three links; distances below kEpsilonDist are rejected.
VarianceProfile variance_profile(const Geometry& geometry);

/// Stream key for one realization: master_seed, realization_index, the three
/// dimensions, and the geometry quantized to 1e-6 are folded in that order
/// through mix_word. Distinct sweep points therefore get independent fades
/// while identical configurations reproduce exactly.
std::uint64_t derive_stream_key(const Dimensions& dims, const Geometry& geometry,
                                const SeedSpec& seed);

/// Draws H1, then G, then H2, each row-major, one polar Gaussian pair per
/// entry with per-component variance (1/L^tau)/2. Identical SeedSpec
/// reproduces the ChannelSet bit-exactly.
ChannelSet draw_channels(const Dimensions& dims, const Geometry& geometry, double noise_var,
                         const SeedSpec& seed);

/// FNV-1a over the raw entry bits; used to assert that paired scheme
/// evaluations saw the same draw.
std::uint64_t hash_channelset(const ChannelSet& ch);

}  // namespace relaysim
