// SPDX-License-Identifier: Apache-2.0

#include "relaysim/schemes.hpp"

#include <cmath>

namespace relaysim {

std::string_view scheme_name(SchemeId id) {
  switch (id) {
    case SchemeId::Proposed:
      return "proposed";
    case SchemeId::SvdMf:
      return "svd-mf";
    case SchemeId::SvdZf:
      return "svd-zf";
    case SchemeId::SvdRzf:
      return "svd-rzf";
    case SchemeId::IMmse:
      return "i-mmse";
  }
  return "?";
}

std::optional<SchemeId> parse_scheme(std::string_view name) {
  for (SchemeId id : kAllSchemes)
    if (scheme_name(id) == name) return id;
  return std::nullopt;
}

namespace {

void check_budget(const PowerBudget& budget) {
  if (!(budget.p_s > 0.0) || !(budget.p_r > 0.0))
    throw std::invalid_argument("power budget: p_s and p_r must be > 0");
}

/// Effective end-to-end transmit columns F*G*P.
ComplexMatrix effective_columns(const ComplexMatrix& f, const ComplexMatrix& g,
                                const ComplexMatrix& p) {
  return f * (g * p);
}

/// Per-user matched-filter columns h2k'/|h2k|.
ComplexMatrix unit_row_adjoints(const ComplexMatrix& h2) {
  ComplexMatrix ft(h2.cols(), h2.rows());
  for (std::size_t k = 0; k < h2.rows(); ++k) {
    double norm2 = 0.0;
    for (std::size_t m = 0; m < h2.cols(); ++m) norm2 += std::norm(h2(k, m));
    if (!(norm2 > 0.0))
      throw DegenerateDrawError("svd-mf: zero-norm forward channel row for user " +
                                std::to_string(k));
    const double inv = 1.0 / std::sqrt(norm2);
    for (std::size_t m = 0; m < h2.cols(); ++m) ft(m, k) = std::conj(h2(k, m)) * inv;
  }
  return ft;
}

}  // namespace

namespace {

/// H'(H H' + load I)^-1. At zero load with square H this is the plain inverse
/// and is computed as such, which keeps the zero-forcing residual at the
/// solver's accuracy instead of squaring the condition number.
ComplexMatrix loaded_adjoint_inverse(const ComplexMatrix& h, double load) {
  if (load == 0.0 && h.rows() == h.cols())
    return solve(h, ComplexMatrix::identity(h.rows()));
  const ComplexMatrix loaded = add_scaled_identity(h * adjoint(h), load);
  // loaded is Hermitian, so H'(H H'+load I)^-1 == (loaded^-1 H)'
  return adjoint(solve(loaded, h));
}

}  // namespace

ComplexMatrix rzf_precoder(const ComplexMatrix& h1, double alpha) {
  if (alpha < 0.0) throw std::invalid_argument("rzf_precoder: alpha must be >= 0");
  return loaded_adjoint_inverse(h1, alpha);
}

double bs_power_factor(const ComplexMatrix& p, double p_s) {
  if (!(p_s > 0.0)) throw std::invalid_argument("bs_power_factor: p_s must be > 0");
  const double tr = trace(p * adjoint(p)).real();
  if (!(tr > 0.0)) throw DegenerateDrawError("bs_power_factor: tr(PP') is zero");
  return std::sqrt(p_s / tr);
}

ComplexMatrix relay_transmit_bm(const ComplexMatrix& h2, double gamma) {
  if (gamma < 0.0) throw std::invalid_argument("relay_transmit_bm: gamma must be >= 0");
  return loaded_adjoint_inverse(h2, gamma);
}

ComplexMatrix relay_receive_bm(const ComplexMatrix& g, const ComplexMatrix& p) {
  const ComplexMatrix gp = g * p;
  if (gp.rows() != gp.cols())
    throw ShapeError("relay_receive_bm: GP must be square, got " + std::to_string(gp.rows()) +
                     "x" + std::to_string(gp.cols()));
  try {
    // Left system F_R (GP) = I solved through its adjoint, so the residual
    // F_R G P - I is the directly controlled quantity.
    return adjoint(solve(adjoint(gp), ComplexMatrix::identity(gp.rows())));
  } catch (const SingularError& e) {
    throw DegenerateDrawError(std::string("relay_receive_bm: singular GP (") + e.what() + ")");
  }
}

ComplexMatrix compose_relay_bm(const ComplexMatrix& f_t, const ComplexMatrix& f_r) {
  return f_t * f_r;
}

double relay_power_factor(const ComplexMatrix& f, const ComplexMatrix& g, const ComplexMatrix& p,
                          double rho_s, double sigma_n2, double p_r) {
  if (!(p_r > 0.0)) throw std::invalid_argument("relay_power_factor: p_r must be > 0");
  const ComplexMatrix t = f * (g * p);
  const ComplexMatrix power = (rho_s * rho_s) * (t * adjoint(t)) + sigma_n2 * (f * adjoint(f));
  const double tr = trace(power).real();
  if (!(tr > 0.0)) throw DegenerateDrawError("relay_power_factor: zero relay transmit power");
  return std::sqrt(p_r / tr);
}

SchemeDesign build_proposed(const ChannelSet& ch, const PowerBudget& budget,
                            const SchemeOptions& opts) {
  check_budget(budget);
  const double k = static_cast<double>(ch.h1.rows());
  const double alpha = opts.alpha.value_or(k * ch.noise_var / budget.p_s);
  const double gamma = opts.gamma.value_or(k * ch.noise_var / budget.p_r);

  SchemeDesign d;
  d.p = rzf_precoder(ch.h1, alpha);
  d.rho_s = bs_power_factor(d.p, budget.p_s);
  const ComplexMatrix f_t = relay_transmit_bm(ch.h2, gamma);
  const ComplexMatrix f_r = relay_receive_bm(ch.g, d.p);
  d.f = compose_relay_bm(f_t, f_r);
  d.rho_r = relay_power_factor(d.f, ch.g, d.p, d.rho_s, ch.noise_var, budget.p_r);
  d.f_t_columns = f_t;
  return d;
}

SchemeDesign build_svd_mf(const ChannelSet& ch, const PowerBudget& budget) {
  check_budget(budget);
  const SvdResult g_svd = svd(ch.g);

  SchemeDesign d;
  d.p = g_svd.v;
  d.rho_s = bs_power_factor(d.p, budget.p_s);
  const ComplexMatrix f_t = unit_row_adjoints(ch.h2);
  d.f = f_t * adjoint(g_svd.u);
  d.rho_r = relay_power_factor(d.f, ch.g, d.p, d.rho_s, ch.noise_var, budget.p_r);
  d.f_t_columns = effective_columns(d.f, ch.g, d.p);
  return d;
}

SchemeDesign build_svd_zf(const ChannelSet& ch, const PowerBudget& budget) {
  check_budget(budget);
  const SvdResult g_svd = svd(ch.g);

  SchemeDesign d;
  d.p = g_svd.v;
  d.rho_s = bs_power_factor(d.p, budget.p_s);
  ComplexMatrix f_t;
  try {
    f_t = relay_transmit_bm(ch.h2, 0.0);
  } catch (const SingularError& e) {
    throw DegenerateDrawError(std::string("svd-zf: singular H2 H2' (") + e.what() + ")");
  }
  d.f = f_t * adjoint(g_svd.u);
  d.rho_r = relay_power_factor(d.f, ch.g, d.p, d.rho_s, ch.noise_var, budget.p_r);
  d.f_t_columns = effective_columns(d.f, ch.g, d.p);
  return d;
}

SchemeDesign build_svd_rzf(const ChannelSet& ch, const PowerBudget& budget,
                           const SchemeOptions& opts) {
  check_budget(budget);
  const double k = static_cast<double>(ch.h1.rows());
  const double gamma = opts.gamma.value_or(k * ch.noise_var / budget.p_r);
  const SvdResult g_svd = svd(ch.g);

  SchemeDesign d;
  d.p = g_svd.v;
  d.rho_s = bs_power_factor(d.p, budget.p_s);
  const ComplexMatrix f_t = relay_transmit_bm(ch.h2, gamma);
  d.f = f_t * adjoint(g_svd.u);
  d.rho_r = relay_power_factor(d.f, ch.g, d.p, d.rho_s, ch.noise_var, budget.p_r);
  d.f_t_columns = effective_columns(d.f, ch.g, d.p);
  return d;
}

SchemeDesign build_i_mmse(const ChannelSet& ch, const PowerBudget& budget,
                          const SchemeOptions& opts) {
  check_budget(budget);
  const double sigma_n2 = ch.noise_var;
  const ComplexMatrix& x = (opts.immse_backward == ImmseBackward::H1) ? ch.h1 : ch.g;

  SchemeDesign d;
  d.p = ComplexMatrix::identity(ch.h1.cols());
  d.rho_s = bs_power_factor(d.p, budget.p_s);
  // (H2'H2 + sigma^2/P_r I)^-1 H2'
  const ComplexMatrix left = solve(
      add_scaled_identity(adjoint(ch.h2) * ch.h2, sigma_n2 / budget.p_r), adjoint(ch.h2));
  // X'(X'X + sigma^2 I)^-1 == ((X'X + sigma^2 I)^-1 X)'
  const ComplexMatrix right = adjoint(solve(add_scaled_identity(adjoint(x) * x, sigma_n2), x));
  d.f = left * right;
  d.rho_r = relay_power_factor(d.f, ch.g, d.p, d.rho_s, ch.noise_var, budget.p_r);
  d.f_t_columns = effective_columns(d.f, ch.g, d.p);
  return d;
}

SchemeDesign build_scheme(SchemeId id, const ChannelSet& ch, const PowerBudget& budget,
                          const SchemeOptions& opts) {
  switch (id) {
    case SchemeId::Proposed:
      return build_proposed(ch, budget, opts);
    case SchemeId::SvdMf:
      return build_svd_mf(ch, budget);
    case SchemeId::SvdZf:
      return build_svd_zf(ch, budget);
    case SchemeId::SvdRzf:
      return build_svd_rzf(ch, budget, opts);
    case SchemeId::IMmse:
      return build_i_mmse(ch, budget, opts);
  }
  throw std::invalid_argument("build_scheme: unknown scheme id");
}

}  // namespace relaysim
