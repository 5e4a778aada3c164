// SPDX-License-Identifier: Apache-2.0

#include "relaysim/montecarlo.hpp"

#include <cmath>
#include <exception>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "relaysim/rates.hpp"

namespace relaysim {

std::string_view axis_name(SweepAxis axis) {
  switch (axis) {
    case SweepAxis::Power:
      return "power";
    case SweepAxis::RsPosition:
      return "rs_position";
    case SweepAxis::Users:
      return "users";
    case SweepAxis::None:
      return "none";
  }
  return "?";
}

std::optional<SweepAxis> parse_axis(std::string_view name) {
  for (SweepAxis a : {SweepAxis::Power, SweepAxis::RsPosition, SweepAxis::Users, SweepAxis::None})
    if (axis_name(a) == name) return a;
  return std::nullopt;
}

double db_to_linear(double db) { return std::pow(10.0, db / 10.0); }

namespace {

constexpr double kBoundViolationSlack = 1e-9;

struct SlotOutcome {
  std::vector<double> exact;
  std::vector<double> lower;
  std::vector<bool> violation;
  bool degenerate = false;
};

SlotOutcome evaluate_slot(const ExperimentConfig& cfg, const PowerBudget& budget,
                          std::uint64_t realization_index) {
  SlotOutcome out;
  const std::size_t n_schemes = cfg.schemes.size();
  out.exact.resize(n_schemes);
  out.lower.resize(n_schemes);
  out.violation.resize(n_schemes);

  const ChannelSet ch = draw_channels(cfg.dims, cfg.geometry, kUnitNoiseVar,
                                      {cfg.master_seed, realization_index});
  const std::uint64_t draw_hash = hash_channelset(ch);
  for (std::size_t s = 0; s < n_schemes; ++s) {
    if (hash_channelset(ch) != draw_hash)
      throw std::logic_error("run_point: paired draw mutated between scheme evaluations");
    try {
      const SchemeDesign d = build_scheme(cfg.schemes[s], ch, budget, cfg.scheme_options);
      const RateReport r = network_rates(ch, d);
      out.exact[s] = r.sum_exact;
      out.lower[s] = r.sum_lower;
      out.violation[s] = r.sum_lower > r.sum_exact + kBoundViolationSlack;
    } catch (const DegenerateDrawError&) {
      out.degenerate = true;
      return out;
    } catch (const SingularError&) {
      out.degenerate = true;
      return out;
    }
  }
  return out;
}

}  // namespace

PointResult run_point(const ExperimentConfig& cfg, RunMode mode, int threads) {
  cfg.dims.validate();
  cfg.geometry.validate();
  if (cfg.realizations == 0) throw std::invalid_argument("run_point: realizations must be >= 1");
  if (cfg.schemes.empty()) throw std::invalid_argument("run_point: empty scheme list");

  const std::size_t n = cfg.realizations;
  const std::size_t n_schemes = cfg.schemes.size();
  const PowerBudget budget{db_to_linear(cfg.p_s_db), db_to_linear(cfg.p_r_db)};

  std::vector<SlotOutcome> slots(n);
#ifdef _OPENMP
  if (mode == RunMode::Parallel) {
    const int num_threads = threads > 0 ? threads : omp_get_max_threads();
    std::exception_ptr first_error = nullptr;
#pragma omp parallel for schedule(static) num_threads(num_threads)
    for (std::int64_t i = 0; i < static_cast<std::int64_t>(n); ++i) {
      try {
        slots[static_cast<std::size_t>(i)] =
            evaluate_slot(cfg, budget, static_cast<std::uint64_t>(i));
      } catch (...) {
#pragma omp critical
        if (!first_error) first_error = std::current_exception();
      }
    }
    if (first_error) std::rethrow_exception(first_error);
  } else
#else
  (void)threads;
  (void)mode;
#endif
  {
    for (std::size_t i = 0; i < n; ++i) slots[i] = evaluate_slot(cfg, budget, i);
  }

  // Redraw degenerate slots in slot order from auxiliary indices n, n+1, ...
  // so the primary stream stays undisturbed and the result stays independent
  // of worker count.
  std::size_t discards = 0;
  std::uint64_t aux_index = n;
  for (std::size_t i = 0; i < n; ++i) {
    while (slots[i].degenerate) {
      ++discards;
      if (detail::discard_budget_exceeded(discards, n))
        throw RunError("run_point: " + std::to_string(discards) +
                       " degenerate draws exceed 0.1% of " + std::to_string(n) +
                       " realizations; check the configuration");
      slots[i] = evaluate_slot(cfg, budget, aux_index++);
    }
  }

  PointResult result;
  result.realizations = n;
  result.discard_count = discards;
  result.per_scheme.reserve(n_schemes);
  for (std::size_t s = 0; s < n_schemes; ++s) {
    SchemeStats stats;
    double mean_exact = 0.0;
    double mean_lower = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      mean_exact += slots[i].exact[s];
      mean_lower += slots[i].lower[s];
    }
    mean_exact /= static_cast<double>(n);
    mean_lower /= static_cast<double>(n);
    double ssd_exact = 0.0;
    double ssd_lower = 0.0;
    std::size_t violations = 0;
    for (std::size_t i = 0; i < n; ++i) {
      const double de = slots[i].exact[s] - mean_exact;
      const double dl = slots[i].lower[s] - mean_lower;
      ssd_exact += de * de;
      ssd_lower += dl * dl;
      if (slots[i].violation[s]) ++violations;
    }
    stats.mean_sum_exact = mean_exact;
    stats.mean_sum_lower = mean_lower;
    if (n > 1) {
      stats.stderr_exact = std::sqrt(ssd_exact / static_cast<double>(n - 1)) /
                           std::sqrt(static_cast<double>(n));
      stats.stderr_lower = std::sqrt(ssd_lower / static_cast<double>(n - 1)) /
                           std::sqrt(static_cast<double>(n));
    }
    stats.mean_gap = mean_exact - mean_lower;
    stats.bound_violation_fraction =
        static_cast<double>(violations) / static_cast<double>(n);
    result.per_scheme.emplace_back(cfg.schemes[s], stats);
  }
  return result;
}

ExperimentConfig apply_sweep_value(const ExperimentConfig& cfg, SweepAxis axis, double value) {
  ExperimentConfig point = cfg;
  switch (axis) {
    case SweepAxis::Power:
      point.p_s_db = value;
      point.p_r_db = value;
      break;
    case SweepAxis::RsPosition:
      point.geometry.rs_pos = value;
      break;
    case SweepAxis::Users: {
      const double rounded = std::round(value);
      if (rounded != value || rounded < 1.0)
        throw RunError("run_sweep: users sweep value " + std::to_string(value) +
                       " is not a positive integer");
      const auto k = static_cast<std::size_t>(rounded);
      point.dims = Dimensions{k, k, k};
      break;
    }
    case SweepAxis::None:
      break;
  }
  return point;
}

SweepResult run_sweep(const ExperimentConfig& cfg, RunMode mode, int threads) {
  SweepResult result;
  result.axis = cfg.sweep.axis;
  if (cfg.sweep.axis == SweepAxis::None) {
    PointResult point = run_point(cfg, mode, threads);
    point.sweep_value = 0.0;
    result.points.push_back(std::move(point));
    return result;
  }
  if (cfg.sweep.values.empty()) throw RunError("run_sweep: empty sweep value list");
  for (const double value : cfg.sweep.values) {
    const ExperimentConfig point_cfg = apply_sweep_value(cfg, cfg.sweep.axis, value);
    PointResult point = run_point(point_cfg, mode, threads);
    point.sweep_value = value;
    result.points.push_back(std::move(point));
  }
  return result;
}

}  // namespace relaysim
