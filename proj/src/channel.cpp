// SPDX-License-Identifier: Apache-2.0

#include "relaysim/channel.hpp"

#include <bit>
#include <cmath>
#include <string>

#include "relaysim/rng.hpp"

namespace relaysim {

namespace {

double link_distance(double a, double b, const char* name) {
  const double d = std::abs(a - b);
  if (d < kEpsilonDist)
    throw GeometryError("geometry: " + std::string(name) + " distance " + std::to_string(d) +
                        " below epsilon_dist=" + std::to_string(kEpsilonDist));
  return d;
}

std::uint64_t quantized(double x) {
  // 1e-6 grid; two's-complement bits of the rounded value
  return static_cast<std::uint64_t>(static_cast<std::int64_t>(std::llround(x * 1e6)));
}

void fill_gaussian(ComplexMatrix& m, double variance, Xoshiro256pp& rng) {
  const double component_std = std::sqrt(0.5 * variance);
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) {
      const NormalPair z = standard_normal_pair(rng);
      m(i, j) = Complex(component_std * z.first, component_std * z.second);
    }
}

}  // namespace

void Geometry::validate() const {
  if (!(tau > 0.0)) throw GeometryError("geometry.tau: must be > 0");
  link_distance(user_pos, bs_pos, "user-bs");
  link_distance(rs_pos, bs_pos, "rs-bs");
  link_distance(user_pos, rs_pos, "user-rs");
  if (!(bs_pos >= 0.0 && bs_pos < 1.0)) throw GeometryError("geometry.bs: must lie in [0,1)");
  if (!(rs_pos > 0.0 && rs_pos < 1.0)) throw GeometryError("geometry.rs: must lie in (0,1)");
}

void Dimensions::validate() const {
  if (k == 0) throw DimensionError("dims.k: must be >= 1");
  if (k > m_b)
    throw DimensionError("dims: requires K <= M_b, got k=" + std::to_string(k) +
                         ", m_b=" + std::to_string(m_b));
  if (m_b != k || m_r != k)
    throw DimensionError("dims: supported configuration is M_b == M_r == K, got m_b=" +
                         std::to_string(m_b) + ", m_r=" + std::to_string(m_r) +
                         ", k=" + std::to_string(k));
}

VarianceProfile variance_profile(const Geometry& geometry) {
  if (geometry.tau < 0.0) throw GeometryError("geometry.tau: must be >= 0");
  const double l_h1 = link_distance(geometry.user_pos, geometry.bs_pos, "user-bs");
  const double l_g = link_distance(geometry.rs_pos, geometry.bs_pos, "rs-bs");
  const double l_h2 = link_distance(geometry.user_pos, geometry.rs_pos, "user-rs");
  return {std::pow(l_h1, -geometry.tau), std::pow(l_g, -geometry.tau),
          std::pow(l_h2, -geometry.tau)};
}

std::uint64_t derive_stream_key(const Dimensions& dims, const Geometry& geometry,
                                const SeedSpec& seed) {
  std::uint64_t key = seed.master_seed;
  key = mix_word(key, seed.realization_index);
  key = mix_word(key, dims.m_b);
  key = mix_word(key, dims.m_r);
  key = mix_word(key, dims.k);
  key = mix_word(key, quantized(geometry.bs_pos));
  key = mix_word(key, quantized(geometry.rs_pos));
  key = mix_word(key, quantized(geometry.user_pos));
  key = mix_word(key, quantized(geometry.tau));
  return key;
}

ChannelSet draw_channels(const Dimensions& dims, const Geometry& geometry, double noise_var,
                         const SeedSpec& seed) {
  dims.validate();
  if (!(noise_var > 0.0)) throw std::invalid_argument("draw_channels: noise_var must be > 0");
  const VarianceProfile vp = variance_profile(geometry);
  Xoshiro256pp rng(derive_stream_key(dims, geometry, seed));
  ChannelSet ch;
  ch.h1 = ComplexMatrix(dims.k, dims.m_b);
  fill_gaussian(ch.h1, vp.h1, rng);
  ch.g = ComplexMatrix(dims.m_r, dims.m_b);
  fill_gaussian(ch.g, vp.g, rng);
  ch.h2 = ComplexMatrix(dims.k, dims.m_r);
  fill_gaussian(ch.h2, vp.h2, rng);
  ch.noise_var = noise_var;
  return ch;
}

std::uint64_t hash_channelset(const ChannelSet& ch) {
  std::uint64_t h = 0xcbf29ce484222325ull;
  const auto absorb = [&h](double d) {
    h ^= std::bit_cast<std::uint64_t>(d);
    h *= 0x100000001b3ull;
  };
  const auto absorb_matrix = [&absorb](const ComplexMatrix& m) {
    for (const Complex& e : m.entries()) {
      absorb(e.real());
      absorb(e.imag());
    }
  };
  absorb_matrix(ch.h1);
  absorb_matrix(ch.g);
  absorb_matrix(ch.h2);
  absorb(ch.noise_var);
  return h;
}

}  // namespace relaysim
