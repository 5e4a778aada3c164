// SPDX-License-Identifier: Apache-2.0

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "doctest.h"
#include "relaysim/cli.hpp"
#include "relaysim/config.hpp"

namespace {

const std::string kTestDir = RELAYSIM_TEST_DIR;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  REQUIRE(in.good());
  std::stringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

std::string tmp_path(const std::string& name) {
  return (std::filesystem::temp_directory_path() / name).string();
}

int call_cli(const std::vector<std::string>& args, std::string* captured = nullptr) {
  std::vector<const char*> argv;
  argv.push_back("relaysim");
  for (const std::string& a : args) argv.push_back(a.c_str());
  std::ostringstream sink;
  std::streambuf* old = std::cout.rdbuf(sink.rdbuf());
  const int rc = relaysim::run_cli(static_cast<int>(argv.size()), argv.data());
  std::cout.rdbuf(old);
  if (captured) *captured = sink.str();
  return rc;
}

std::size_t count_lines(const std::string& text) {
  std::size_t n = 0;
  for (const char c : text)
    if (c == '\n') ++n;
  return n;
}

}  // namespace

TEST_CASE("golden file: tiny fixed-seed run is byte-stable") {
  const std::string out = tmp_path("relaysim_golden_check.csv");
  const int rc =
      call_cli({"single", "--config", kTestDir + "/data/golden.cfg", "--output", out});
  REQUIRE(rc == 0);
  CHECK(read_file(out) == read_file(kTestDir + "/golden/single_k2.csv"));
  std::remove(out.c_str());
}

TEST_CASE("reruns and thread counts produce byte-identical CSV") {
  const std::string out1 = tmp_path("relaysim_det_1.csv");
  const std::string out2 = tmp_path("relaysim_det_2.csv");
  const std::string out4 = tmp_path("relaysim_det_4.csv");
  const std::vector<std::string> base{"single", "--config", kTestDir + "/data/golden.cfg"};

  auto with = [&base](std::initializer_list<std::string> extra) {
    std::vector<std::string> args = base;
    args.insert(args.end(), extra);
    return args;
  };
  REQUIRE(call_cli(with({"--output", out1, "--threads", "1"})) == 0);
  REQUIRE(call_cli(with({"--output", out2, "--threads", "1"})) == 0);
  REQUIRE(call_cli(with({"--output", out4, "--threads", "4"})) == 0);
  const std::string a = read_file(out1);
  CHECK(a == read_file(out2));
  CHECK(a == read_file(out4));
  std::remove(out1.c_str());
  std::remove(out2.c_str());
  std::remove(out4.c_str());
}

TEST_CASE("sweep-users emits one row per value and scheme") {
  const std::string out = tmp_path("relaysim_users.csv");
  const int rc = call_cli({"sweep-users", "--config", kTestDir + "/data/golden.cfg",
                           "--realizations", "5", "--schemes", "proposed,svd-zf", "--output",
                           out});
  REQUIRE(rc == 0);
  const std::string csv = read_file(out);
  // 5 default user counts x 2 schemes + header
  CHECK(count_lines(csv) == 11);
  CHECK(csv.find("users,2,proposed,") != std::string::npos);
  CHECK(csv.find("users,6,svd-zf,") != std::string::npos);
  std::remove(out.c_str());
}

TEST_CASE("summary table shows the same numbers as the CSV") {
  const std::string out = tmp_path("relaysim_summary.csv");
  std::string table;
  REQUIRE(call_cli({"single", "--config", kTestDir + "/data/golden.cfg", "--output", out},
                   &table) == 0);
  const std::string csv = read_file(out);

  // every numeric CSV field appears verbatim in the summary table
  std::stringstream lines(csv);
  std::string line;
  std::getline(lines, line);  // header
  while (std::getline(lines, line)) {
    std::stringstream fields(line);
    std::string field;
    int idx = 0;
    while (std::getline(fields, field, ',')) {
      if (idx >= 3 && idx <= 6) CHECK(table.find(field) != std::string::npos);
      ++idx;
    }
  }
  std::remove(out.c_str());
}

TEST_CASE("validate accepts a good config and prints its resolved form") {
  std::string printed;
  REQUIRE(call_cli({"validate", "--config", kTestDir + "/data/golden.cfg"}, &printed) == 0);
  CHECK(printed.find("dims.k = 2") != std::string::npos);
  CHECK(printed.find("mc.realizations = 10") != std::string::npos);
  CHECK(printed.find("schemes = proposed, svd-mf, svd-zf, svd-rzf, i-mmse") !=
        std::string::npos);
}

TEST_CASE("validate rejects a degenerate relay position naming epsilon_dist") {
  CHECK(call_cli({"validate", "--config", kTestDir + "/data/bad_rs.cfg"}) == 2);
  try {
    relaysim::validate_experiment(
        relaysim::load_config_file(kTestDir + "/data/bad_rs.cfg"));
    FAIL("expected GeometryError");
  } catch (const relaysim::GeometryError& e) {
    CHECK(std::string(e.what()).find("epsilon_dist") != std::string::npos);
  }
}

TEST_CASE("validate rejects mismatched antenna counts") {
  CHECK(call_cli({"validate", "--config", kTestDir + "/data/bad_dims.cfg"}) == 2);
}

TEST_CASE("unknown config keys are rejected") {
  CHECK(call_cli({"validate", "--config", kTestDir + "/data/unknown_key.cfg"}) == 2);
  CHECK(call_cli({"single", "--config", kTestDir + "/data/unknown_key.cfg"}) == 2);
}

TEST_CASE("usage errors exit with status 2") {
  CHECK(call_cli({}) == 2);
  CHECK(call_cli({"frobnicate"}) == 2);
  CHECK(call_cli({"single", "--format", "json"}) == 2);
  CHECK(call_cli({"validate"}) == 2);  // --config is required
}

TEST_CASE("config parsing details") {
  using namespace relaysim;
  const ExperimentConfig cfg = parse_config_text(
      "dims.k = 3\n"
      "# comment\n"
      "\n"
      "schemes = proposed\n"
      "sweep.axis = power\n"
      "sweep.values = 1, 2, 3\n"
      "immse.backward = g\n");
  CHECK(cfg.dims.k == 3);
  CHECK(cfg.dims.m_b == 3);
  CHECK(cfg.dims.m_r == 3);
  CHECK(cfg.schemes.size() == 1);
  CHECK(cfg.sweep.axis == SweepAxis::Power);
  CHECK(cfg.sweep.values.size() == 3);
  CHECK(cfg.scheme_options.immse_backward == ImmseBackward::G);

  CHECK_THROWS_AS((void)parse_config_text("dims.k 4\n"), ConfigError);
  CHECK_THROWS_AS((void)parse_config_text("dims.k = x\n"), ConfigError);
  CHECK_THROWS_AS((void)parse_config_text("schemes = proposed, proposed\n"), ConfigError);
  CHECK_THROWS_AS((void)parse_config_text("sweep.axis = sideways\n"), ConfigError);

  ExperimentConfig decreasing = parse_config_text("sweep.axis = power\nsweep.values = 3, 2\n");
  CHECK_THROWS_AS(validate_experiment(decreasing), ConfigError);
}

TEST_CASE("config sweep axis must match the subcommand") {
  const std::string cfg_path = tmp_path("relaysim_axis.cfg");
  std::ofstream(cfg_path) << "sweep.axis = power\nsweep.values = 10, 20\n";
  const std::string out = tmp_path("relaysim_axis.csv");
  CHECK(call_cli({"sweep-users", "--config", cfg_path, "--output", out}) == 2);
  // matching subcommand is fine
  CHECK(call_cli({"sweep-power", "--config", cfg_path, "--realizations", "5", "--schemes",
                  "proposed", "--output", out}) == 0);
  std::remove(cfg_path.c_str());
  std::remove(out.c_str());
}
