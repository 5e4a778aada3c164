// SPDX-License-Identifier: Apache-2.0

#include "relaysim/rates.hpp"

#include <cmath>
#include <string>
#include <tuple>

namespace relaysim {

PerUserBlocks user_blocks(const ChannelSet& ch, const SchemeDesign& d, std::size_t k) {
  const std::size_t users = ch.h1.rows();
  if (k >= users) throw std::out_of_range("user_blocks: user " + std::to_string(k));
  if (d.p.cols() != users || d.f_t_columns.cols() != users)
    throw ShapeError("user_blocks: design does not match channel dimensions");

  const double rho_s = d.rho_s;
  const double rho_rs = d.rho_r * d.rho_s;
  const double sigma_n2 = ch.noise_var;

  const auto phase1_gain = [&](std::size_t j) {
    Complex s = 0.0;
    for (std::size_t m = 0; m < ch.h1.cols(); ++m) s += ch.h1(k, m) * d.p(m, j);
    return rho_s * s;
  };
  const auto phase2_gain = [&](std::size_t j) {
    Complex s = 0.0;
    for (std::size_t m = 0; m < ch.h2.cols(); ++m) s += ch.h2(k, m) * d.f_t_columns(m, j);
    return rho_rs * s;
  };

  PerUserBlocks blocks;
  blocks.a = ComplexMatrix(2, 1);
  blocks.a(0, 0) = phase1_gain(k);
  blocks.a(1, 0) = phase2_gain(k);

  blocks.b = ComplexMatrix(2, users - 1);
  std::size_t c = 0;
  for (std::size_t j = 0; j < users; ++j) {
    if (j == k) continue;
    blocks.b(0, c) = phase1_gain(j);
    blocks.b(1, c) = phase2_gain(j);
    ++c;
  }

  // relay noise forwarded through row k of H2 F
  double forwarded = 0.0;
  for (std::size_t col = 0; col < d.f.cols(); ++col) {
    Complex s = 0.0;
    for (std::size_t m = 0; m < ch.h2.cols(); ++m) s += ch.h2(k, m) * d.f(m, col);
    forwarded += std::norm(s);
  }
  blocks.n_cov = ComplexMatrix(2, 2);
  blocks.n_cov(0, 0) = sigma_n2;
  blocks.n_cov(1, 1) = sigma_n2 * d.rho_r * d.rho_r * forwarded + sigma_n2;
  return blocks;
}

double exact_user_rate(const PerUserBlocks& blocks) {
  const ComplexMatrix denom = blocks.b * adjoint(blocks.b) + blocks.n_cov;
  const ComplexMatrix num = blocks.a * adjoint(blocks.a);
  // AA' C^-1 == (C^-1 AA')' for Hermitian C and AA'
  const ComplexMatrix m = adjoint(solve(denom, num));
  const Complex det =
      (1.0 + m(0, 0)) * (1.0 + m(1, 1)) - m(0, 1) * m(1, 0);
  const double d = det.real();
  if (!std::isfinite(d) || !(d > 0.0))
    throw NumericError("exact_user_rate: determinant " + std::to_string(d));
  return 0.5 * std::log2(d);
}

std::pair<double, double> sinr_pair(const PerUserBlocks& blocks) {
  double interf1 = 0.0;
  double interf2 = 0.0;
  for (std::size_t j = 0; j < blocks.b.cols(); ++j) {
    interf1 += std::norm(blocks.b(0, j));
    interf2 += std::norm(blocks.b(1, j));
  }
  const double sinr1 = std::norm(blocks.a(0, 0)) / (interf1 + blocks.n_cov(0, 0).real());
  const double sinr2 = std::norm(blocks.a(1, 0)) / (interf2 + blocks.n_cov(1, 1).real());
  return {sinr1, sinr2};
}

double lower_bound_user_rate(double sinr1, double sinr2) {
  if (sinr1 < 0.0 || sinr2 < 0.0)
    throw std::invalid_argument("lower_bound_user_rate: negative SINR");
  return 0.5 * std::log2(1.0 + sinr1 + sinr2);
}

RateReport network_rates(const ChannelSet& ch, const SchemeDesign& d) {
  RateReport report;
  const std::size_t users = ch.h1.rows();
  report.users.reserve(users);
  for (std::size_t k = 0; k < users; ++k) {
    const PerUserBlocks blocks = user_blocks(ch, d, k);
    UserRate r;
    std::tie(r.sinr1, r.sinr2) = sinr_pair(blocks);
    r.rate_exact = exact_user_rate(blocks);
    r.rate_lower = lower_bound_user_rate(r.sinr1, r.sinr2);
    report.sum_exact += r.rate_exact;
    report.sum_lower += r.rate_lower;
    report.users.push_back(r);
  }
  return report;
}

}  // namespace relaysim
