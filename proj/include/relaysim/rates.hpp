// SPDX-License-Identifier: Apache-2.0
//
// Per-user rate evaluation: the two-phase received-signal blocks, exact
// mutual information, the SINR-based lower bound, and network sums.

#pragma once

#include <stdexcept>
#include <utility>
#include <vector>

#include "relaysim/channel.hpp"
#include "relaysim/matrix.hpp"
#include "relaysim/schemes.hpp"

namespace relaysim {

class NumericError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Two-phase observation model for one user:
///   y[k] = A s_k + B s_interf + N
/// a is 2x1 (desired gains in phases 1 and 2), b is 2x(K-1) (interference
/// gains), n_cov is the exactly-diagonal 2x2 noise covariance E[NN'].
struct PerUserBlocks {
  ComplexMatrix a;
  ComplexMatrix b;
  ComplexMatrix n_cov;
};

struct UserRate {
  double sinr1 = 0.0;       // phase 1 (direct)
  double sinr2 = 0.0;       // phase 2 (relayed)
  double rate_exact = 0.0;  // bits/channel use
  double rate_lower = 0.0;  // 0.5*log2(1+sinr1+sinr2)
};

struct RateReport {
  std::vector<UserRate> users;
  double sum_exact = 0.0;
  double sum_lower = 0.0;
};

/// Blocks for user k (0-based):
///   A = [rho_s h1k p_k ; rho_r rho_s h2k f_Tk]
///   B columns over j != k analogously
///   E[NN'] = diag(sigma_n^2, sigma_n^2 rho_r^2 h2k F F' h2k' + sigma_n^2)
PerUserBlocks user_blocks(const ChannelSet& ch, const SchemeDesign& d, std::size_t k);

/// 0.5*log2 det(I2 + AA'(BB'+E[NN'])^-1), bits per channel use. The half
/// reflects the two-phase half-duplex protocol.
double exact_user_rate(const PerUserBlocks& blocks);

/// Phase-wise SINRs read off the blocks.
std::pair<double, double> sinr_pair(const PerUserBlocks& blocks);

/// 0.5*log2(1 + sinr1 + sinr2).
double lower_bound_user_rate(double sinr1, double sinr2);

RateReport network_rates(const ChannelSet& ch, const SchemeDesign& d);

}  // namespace relaysim
