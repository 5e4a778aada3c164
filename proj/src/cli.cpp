// SPDX-License-Identifier: Apache-2.0

#include "relaysim/cli.hpp"

#include <charconv>
#include <cstdlib>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "relaysim/config.hpp"
#include "relaysim/csv.hpp"
#include "relaysim/montecarlo.hpp"

namespace relaysim {

namespace {

struct SubOpts {
  std::string config;
  std::uint64_t seed = 0;
  std::size_t realizations = 0;
  std::string schemes;
  std::string output;
  std::string format = "csv";
  int threads = 0;
  CLI::Option* o_config = nullptr;
  CLI::Option* o_seed = nullptr;
  CLI::Option* o_realizations = nullptr;
  CLI::Option* o_schemes = nullptr;
  CLI::Option* o_output = nullptr;
  CLI::Option* o_threads = nullptr;
};

void attach_run_options(CLI::App* sub, SubOpts& o) {
  o.o_config = sub->add_option("--config", o.config, "experiment config file");
  o.o_seed = sub->add_option("--seed", o.seed, "override mc.seed");
  o.o_realizations =
      sub->add_option("--realizations", o.realizations, "override mc.realizations");
  o.o_schemes = sub->add_option("--schemes", o.schemes, "comma-separated scheme list");
  o.o_output = sub->add_option("--output", o.output, "CSV output path");
  sub->add_option("--format", o.format, "output format")->check(CLI::IsMember({"csv"}));
  o.o_threads =
      sub->add_option("--threads", o.threads, "worker threads (0 = OpenMP default)");
}

/// Default sweep grids, matching the shipped experiment presets.
std::vector<double> default_sweep_values(SweepAxis axis) {
  switch (axis) {
    case SweepAxis::Power:
      return {10.0, 16.0, 22.0, 28.0, 34.0};
    case SweepAxis::RsPosition:
      return {0.1, 0.25, 0.5, 0.75, 0.9};
    case SweepAxis::Users:
      return {2.0, 3.0, 4.0, 5.0, 6.0};
    case SweepAxis::None:
      break;
  }
  return {};
}

ExperimentConfig make_config(const SubOpts& o) {
  ExperimentConfig cfg =
      o.o_config->count() ? load_config_file(o.config) : ExperimentConfig{};
  if (o.o_seed->count()) cfg.master_seed = o.seed;
  if (o.o_realizations->count()) cfg.realizations = o.realizations;
  if (o.o_schemes->count()) cfg.schemes = parse_scheme_list(o.schemes);
  return cfg;
}

int resolve_threads(const SubOpts& o) {
  if (o.o_threads->count()) {
    if (o.threads < 0) throw ConfigError("config: --threads: must be >= 0");
    return o.threads;
  }
  if (const char* env = std::getenv("RELAYSIM_THREADS")) {
    int value = 0;
    const std::string text(env);
    const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec != std::errc{} || ptr != text.data() + text.size() || value < 0)
      throw ConfigError("config: RELAYSIM_THREADS: expected a non-negative integer, got '" +
                        text + "'");
    return value;
  }
  return 0;
}

int run_command(const SubOpts& o, SweepAxis axis, const std::string& default_output) {
  ExperimentConfig cfg = make_config(o);
  if (axis == SweepAxis::None) {
    cfg.sweep = SweepSpec{};
  } else {
    if (cfg.sweep.axis != SweepAxis::None && cfg.sweep.axis != axis)
      throw ConfigError("config: sweep.axis: config file selects '" +
                        std::string(axis_name(cfg.sweep.axis)) +
                        "' but the subcommand sweeps '" + std::string(axis_name(axis)) + "'");
    cfg.sweep.axis = axis;
    if (cfg.sweep.values.empty()) cfg.sweep.values = default_sweep_values(axis);
  }
  validate_experiment(cfg);

  const int threads = resolve_threads(o);
  const SweepResult result = run_sweep(cfg, RunMode::Parallel, threads);

  const std::string path = o.o_output->count() ? o.output : default_output;
  write_text_file(path, to_csv(result));
  std::cout << to_summary_table(result);
  std::cout << "wrote " << path << "\n";
  return 0;
}

int run_validate(const std::string& config_path) {
  const ExperimentConfig cfg = load_config_file(config_path);
  validate_experiment(cfg);
  std::cout << render_config(cfg);
  return 0;
}

}  // namespace

int run_cli(int argc, const char* const* argv) {
  CLI::App app{"Monte Carlo sum-rate simulator for two-hop MIMO relaying broadcast "
               "channels with direct links"};
  app.require_subcommand(1);

  CLI::App* single = app.add_subcommand("single", "one operating point, one CSV row per scheme");
  CLI::App* sweep_power =
      app.add_subcommand("sweep-power", "sweep the transmit power (P_s = P_r, dB)");
  CLI::App* sweep_position = app.add_subcommand("sweep-position", "sweep the RS position");
  CLI::App* sweep_users =
      app.add_subcommand("sweep-users", "sweep the user count (K = M_b = M_r)");
  CLI::App* validate =
      app.add_subcommand("validate", "check a config and print its resolved form");

  SubOpts single_opts, power_opts, position_opts, users_opts, validate_opts;
  attach_run_options(single, single_opts);
  attach_run_options(sweep_power, power_opts);
  attach_run_options(sweep_position, position_opts);
  attach_run_options(sweep_users, users_opts);
  validate_opts.o_config =
      validate->add_option("--config", validate_opts.config, "experiment config file")
          ->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }

  try {
    if (single->parsed()) return run_command(single_opts, SweepAxis::None, "single.csv");
    if (sweep_power->parsed())
      return run_command(power_opts, SweepAxis::Power, "sweep-power.csv");
    if (sweep_position->parsed())
      return run_command(position_opts, SweepAxis::RsPosition, "sweep-position.csv");
    if (sweep_users->parsed())
      return run_command(users_opts, SweepAxis::Users, "sweep-users.csv");
    if (validate->parsed()) return run_validate(validate_opts.config);
  } catch (const ConfigError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const GeometryError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const DimensionError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  }
  return 2;
}

}  // namespace relaysim
