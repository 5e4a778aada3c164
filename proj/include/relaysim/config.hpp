// SPDX-License-Identifier: Apache-2.0
//
// Plain-text key=value experiment configuration. Unknown keys are rejected;
// missing keys fall back to the defaults baked into ExperimentConfig.

#pragma once

#include <stdexcept>
#include <string>

#include "relaysim/montecarlo.hpp"

namespace relaysim {

/// Invalid configuration; the message names the offending key.
class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Recognized keys:
///   dims.k, dims.m_b, dims.m_r        (m_b/m_r optional, must equal k)
///   geometry.bs, geometry.rs, geometry.user, geometry.tau
///   power.ps_db, power.pr_db
///   mc.realizations, mc.seed
///   schemes                           comma-separated scheme names
///   sweep.axis, sweep.values          power | rs_position | users
///   immse.backward                    h1 (published form) | g
///   rzf.alpha, rzf.gamma              optional loading overrides
ExperimentConfig parse_config_text(const std::string& text);
ExperimentConfig load_config_file(const std::string& path);

/// Full invariant check; throws ConfigError / GeometryError / DimensionError
/// naming the first violated key.
void validate_experiment(const ExperimentConfig& cfg);

/// Fully-resolved effective configuration, in config-file syntax.
std::string render_config(const ExperimentConfig& cfg);

/// Comma-separated scheme list -> ids; throws ConfigError on unknown names.
std::vector<SchemeId> parse_scheme_list(const std::string& text);

}  // namespace relaysim
