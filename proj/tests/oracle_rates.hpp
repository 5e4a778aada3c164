// SPDX-License-Identifier: Apache-2.0
//
// Brute-force scalar reimplementation of the two-phase rate pipeline,
// test-only. Works entry-by-entry on std::complex scalars with explicit 2x2
// adjugate inversion; shares no code path with the library's matrix kernel.

#pragma once

#include <cmath>
#include <complex>
#include <vector>

#include "relaysim/channel.hpp"
#include "relaysim/schemes.hpp"

namespace oracle {

using Cx = std::complex<double>;

struct UserResult {
  double sinr1 = 0.0;
  double sinr2 = 0.0;
  double exact = 0.0;
  double lower = 0.0;
};

struct Result {
  std::vector<UserResult> users;
  double sum_exact = 0.0;
  double sum_lower = 0.0;
};

inline Result scalar_rates(const relaysim::ChannelSet& ch, const relaysim::SchemeDesign& d) {
  const std::size_t users = ch.h1.rows();
  const std::size_t m_b = ch.h1.cols();
  const std::size_t m_r = ch.h2.cols();
  const double s2 = ch.noise_var;
  Result out;

  for (std::size_t k = 0; k < users; ++k) {
    // desired and interfering gains in both phases
    std::vector<Cx> g1(users), g2(users);
    for (std::size_t j = 0; j < users; ++j) {
      Cx acc1 = 0.0;
      for (std::size_t m = 0; m < m_b; ++m) acc1 += ch.h1(k, m) * d.p(m, j);
      g1[j] = d.rho_s * acc1;
      Cx acc2 = 0.0;
      for (std::size_t m = 0; m < m_r; ++m) acc2 += ch.h2(k, m) * d.f_t_columns(m, j);
      g2[j] = d.rho_r * d.rho_s * acc2;
    }
    // forwarded relay noise power at user k
    double fwd = 0.0;
    for (std::size_t c = 0; c < d.f.cols(); ++c) {
      Cx acc = 0.0;
      for (std::size_t m = 0; m < m_r; ++m) acc += ch.h2(k, m) * d.f(m, c);
      fwd += std::norm(acc);
    }
    const double n1 = s2;
    const double n2 = s2 * d.rho_r * d.rho_r * fwd + s2;

    // 2x2 blocks, scalar arithmetic throughout
    const Cx a1 = g1[k];
    const Cx a2 = g2[k];
    Cx aa00 = a1 * std::conj(a1), aa01 = a1 * std::conj(a2);
    Cx aa10 = a2 * std::conj(a1), aa11 = a2 * std::conj(a2);
    Cx c00 = n1, c01 = 0.0, c10 = 0.0, c11 = n2;
    double i1 = 0.0, i2 = 0.0;
    for (std::size_t j = 0; j < users; ++j) {
      if (j == k) continue;
      c00 += g1[j] * std::conj(g1[j]);
      c01 += g1[j] * std::conj(g2[j]);
      c10 += g2[j] * std::conj(g1[j]);
      c11 += g2[j] * std::conj(g2[j]);
      i1 += std::norm(g1[j]);
      i2 += std::norm(g2[j]);
    }
    // adjugate inverse of the 2x2 denominator
    const Cx det_c = c00 * c11 - c01 * c10;
    const Cx inv00 = c11 / det_c, inv01 = -c01 / det_c;
    const Cx inv10 = -c10 / det_c, inv11 = c00 / det_c;
    // M = AA * C^-1
    const Cx m00 = aa00 * inv00 + aa01 * inv10;
    const Cx m01 = aa00 * inv01 + aa01 * inv11;
    const Cx m10 = aa10 * inv00 + aa11 * inv10;
    const Cx m11 = aa10 * inv01 + aa11 * inv11;
    const Cx det = (1.0 + m00) * (1.0 + m11) - m01 * m10;

    UserResult u;
    u.exact = 0.5 * std::log2(det.real());
    u.sinr1 = std::norm(a1) / (i1 + n1);
    u.sinr2 = std::norm(a2) / (i2 + n2);
    u.lower = 0.5 * std::log2(1.0 + u.sinr1 + u.sinr2);
    out.sum_exact += u.exact;
    out.sum_lower += u.lower;
    out.users.push_back(u);
  }
  return out;
}

}  // namespace oracle
