// SPDX-License-Identifier: Apache-2.0
//
// Transmit-side designs: for one fading realization, each scheme produces the
// BS precoding matrix P, the relay beamforming matrix F, and the power
// control factors rho_s / rho_r. Matrices are stored unscaled; the rate
// formulas consume the (P, F, rho_s, rho_r) quadruple.

#pragma once

#include <array>
#include <optional>
#include <stdexcept>
#include <string_view>

#include "relaysim/channel.hpp"
#include "relaysim/matrix.hpp"

namespace relaysim {

enum class SchemeId { Proposed, SvdMf, SvdZf, SvdRzf, IMmse };

inline constexpr std::array<SchemeId, 5> kAllSchemes = {
    SchemeId::Proposed, SchemeId::SvdMf, SchemeId::SvdZf, SchemeId::SvdRzf, SchemeId::IMmse};

std::string_view scheme_name(SchemeId id);
std::optional<SchemeId> parse_scheme(std::string_view name);

/// A channel draw that admits no valid design (singular effective channel,
/// zero-norm user row). Zero-probability under the fading model; the Monte
/// Carlo driver discards and redraws.
class DegenerateDrawError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Transmit power limits at the BS and RS, linear scale.
struct PowerBudget {
  double p_s;
  double p_r;
};

/// Which channel stands in for the BS->RS hop inside the I-MMSE receive
/// filter. The scheme is usually written with H1 even though the relay
/// receives through G; both variants are available, H1 being the default.
enum class ImmseBackward { H1, G };

struct SchemeOptions {
  ImmseBackward immse_backward = ImmseBackward::H1;
  std::optional<double> alpha;  // BS RZF loading override; default K*sigma_n^2/P_s
  std::optional<double> gamma;  // RS RZF loading override; default K*sigma_n^2/P_r
};

/// Design for one realization. Invariants (relative 1e-12):
///   rho_s^2 * tr(P P') == p_s
///   rho_r^2 * tr(rho_s^2 F G P P' G' F' + sigma_n^2 F F') == p_r
/// f_t_columns holds the per-user transmit-side columns the rate formulas
/// consume: the RS transmit filter columns for the proposed scheme, and the
/// effective end-to-end columns F*G*P for the baselines.
struct SchemeDesign {
  ComplexMatrix p;            // M_b x K
  ComplexMatrix f;            // M_r x M_r
  double rho_s = 0.0;
  double rho_r = 0.0;
  ComplexMatrix f_t_columns;  // M_r x K
};

/// P = H1' (H1 H1' + alpha I)^-1.
ComplexMatrix rzf_precoder(const ComplexMatrix& h1, double alpha);

/// rho_s with rho_s^2 tr(P P') == p_s.
double bs_power_factor(const ComplexMatrix& p, double p_s);

/// F_T = H2' (H2 H2' + gamma I)^-1.
ComplexMatrix relay_transmit_bm(const ComplexMatrix& h2, double gamma);

/// F_R = (P'G'GP)^-1 P'G', the zero-forcing receive filter for the effective
/// channel GP; satisfies F_R G P == I. GP is square here, so this is computed
/// as the direct inverse of GP.
ComplexMatrix relay_receive_bm(const ComplexMatrix& g, const ComplexMatrix& p);

/// F = F_T * F_R, so that H2 F G P collapses to H2 F_T.
ComplexMatrix compose_relay_bm(const ComplexMatrix& f_t, const ComplexMatrix& f_r);

/// rho_r = sqrt(p_r / tr(rho_s^2 F G P P'G'F' + sigma_n^2 F F')).
double relay_power_factor(const ComplexMatrix& f, const ComplexMatrix& g, const ComplexMatrix& p,
                          double rho_s, double sigma_n2, double p_r);

SchemeDesign build_proposed(const ChannelSet& ch, const PowerBudget& budget,
                            const SchemeOptions& opts = {});
SchemeDesign build_svd_mf(const ChannelSet& ch, const PowerBudget& budget);
SchemeDesign build_svd_zf(const ChannelSet& ch, const PowerBudget& budget);
SchemeDesign build_svd_rzf(const ChannelSet& ch, const PowerBudget& budget,
                           const SchemeOptions& opts = {});
SchemeDesign build_i_mmse(const ChannelSet& ch, const PowerBudget& budget,
                          const SchemeOptions& opts = {});

SchemeDesign build_scheme(SchemeId id, const ChannelSet& ch, const PowerBudget& budget,
                          const SchemeOptions& opts = {});

}  // namespace relaysim
