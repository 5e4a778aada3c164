// SPDX-License-Identifier: Apache-2.0
//
// Seeded ensemble runner. Realizations are the parallel unit: slot i always
// draws with realization_index i, every scheme is evaluated on the same draw,
// and aggregation happens serially in index order, so results are bit
// identical whether slots run serially or across OpenMP workers.

#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "relaysim/channel.hpp"
#include "relaysim/schemes.hpp"

namespace relaysim {

/// Discard budget exceeded or another ensemble-level failure.
class RunError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class SweepAxis { Power, RsPosition, Users, None };

std::string_view axis_name(SweepAxis axis);
std::optional<SweepAxis> parse_axis(std::string_view name);

struct SweepSpec {
  SweepAxis axis = SweepAxis::None;
  std::vector<double> values;  // strictly increasing; integers when axis == Users
};

struct ExperimentConfig {
  Dimensions dims;
  Geometry geometry;
  double p_s_db = 28.0;
  double p_r_db = 28.0;
  std::vector<SchemeId> schemes{kAllSchemes.begin(), kAllSchemes.end()};
  std::size_t realizations = 2000;
  std::uint64_t master_seed = 1;
  SweepSpec sweep;
  SchemeOptions scheme_options;
};

struct SchemeStats {
  double mean_sum_exact = 0.0;
  double stderr_exact = 0.0;
  double mean_sum_lower = 0.0;
  double stderr_lower = 0.0;
  double mean_gap = 0.0;  // mean_sum_exact - mean_sum_lower
  double bound_violation_fraction = 0.0;
};

struct PointResult {
  double sweep_value = 0.0;
  std::size_t realizations = 0;
  std::size_t discard_count = 0;
  std::vector<std::pair<SchemeId, SchemeStats>> per_scheme;
};

struct SweepResult {
  SweepAxis axis = SweepAxis::None;
  std::vector<PointResult> points;
};

enum class RunMode { Serial, Parallel };

/// Unit-noise normalization: transmit powers are dB relative to sigma_n^2 = 1.
inline constexpr double kUnitNoiseVar = 1.0;

double db_to_linear(double db);

/// Sum-rate statistics for one operating point. Every scheme sees the same
/// paired draws; degenerate draws are discarded and redrawn from auxiliary
/// indices realizations, realizations+1, ... in slot order, and the run fails
/// if discards exceed 0.1% of realizations. threads <= 0 selects the OpenMP
/// default.
PointResult run_point(const ExperimentConfig& cfg, RunMode mode = RunMode::Parallel,
                      int threads = 0);

/// run_point per sweep value. Power sweeps set both budgets to the swept dB
/// value; position sweeps move the RS; user sweeps set M_b = M_r = K.
SweepResult run_sweep(const ExperimentConfig& cfg, RunMode mode = RunMode::Parallel,
                      int threads = 0);

/// cfg with one sweep value applied.
ExperimentConfig apply_sweep_value(const ExperimentConfig& cfg, SweepAxis axis, double value);

namespace detail {
inline bool discard_budget_exceeded(std::size_t discards, std::size_t realizations) {
  return 1000.0 * static_cast<double>(discards) > static_cast<double>(realizations);
}
}  // namespace detail

}  // namespace relaysim
