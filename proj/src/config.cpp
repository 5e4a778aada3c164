// SPDX-License-Identifier: Apache-2.0

#include "relaysim/config.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <set>
#include <sstream>

namespace relaysim {

namespace {

std::string trim(std::string_view s) {
  const auto begin = s.find_first_not_of(" \t\r\n");
  if (begin == std::string_view::npos) return {};
  const auto end = s.find_last_not_of(" \t\r\n");
  return std::string(s.substr(begin, end - begin + 1));
}

std::vector<std::string> split_list(const std::string& value) {
  std::vector<std::string> items;
  std::stringstream ss(value);
  std::string item;
  while (std::getline(ss, item, ',')) {
    item = trim(item);
    if (!item.empty()) items.push_back(item);
  }
  return items;
}

double parse_double(const std::string& key, const std::string& value) {
  double out = 0.0;
  const char* first = value.data();
  const char* last = value.data() + value.size();
  const auto [ptr, ec] = std::from_chars(first, last, out);
  if (ec != std::errc{} || ptr != last)
    throw ConfigError("config: " + key + ": expected a number, got '" + value + "'");
  return out;
}

std::uint64_t parse_u64(const std::string& key, const std::string& value) {
  std::uint64_t out = 0;
  const char* first = value.data();
  const char* last = value.data() + value.size();
  const auto [ptr, ec] = std::from_chars(first, last, out);
  if (ec != std::errc{} || ptr != last)
    throw ConfigError("config: " + key + ": expected an unsigned integer, got '" + value + "'");
  return out;
}

std::size_t parse_size(const std::string& key, const std::string& value) {
  return static_cast<std::size_t>(parse_u64(key, value));
}

}  // namespace

std::vector<SchemeId> parse_scheme_list(const std::string& text) {
  std::vector<SchemeId> ids;
  for (const std::string& name : split_list(text)) {
    const auto id = parse_scheme(name);
    if (!id) throw ConfigError("config: schemes: unknown scheme '" + name + "'");
    if (std::find(ids.begin(), ids.end(), *id) != ids.end())
      throw ConfigError("config: schemes: duplicate scheme '" + name + "'");
    ids.push_back(*id);
  }
  if (ids.empty()) throw ConfigError("config: schemes: empty list");
  return ids;
}

ExperimentConfig parse_config_text(const std::string& text) {
  ExperimentConfig cfg;
  bool k_set = false;
  bool m_b_set = false;
  bool m_r_set = false;

  std::stringstream stream(text);
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(stream, line)) {
    ++line_no;
    const std::string stripped = trim(line);
    if (stripped.empty() || stripped.front() == '#') continue;
    const auto eq = stripped.find('=');
    if (eq == std::string::npos)
      throw ConfigError("config: line " + std::to_string(line_no) + ": expected key = value");
    const std::string key = trim(stripped.substr(0, eq));
    const std::string value = trim(stripped.substr(eq + 1));
    if (key.empty() || value.empty())
      throw ConfigError("config: line " + std::to_string(line_no) + ": empty key or value");

    if (key == "dims.k") {
      cfg.dims.k = parse_size(key, value);
      k_set = true;
    } else if (key == "dims.m_b") {
      cfg.dims.m_b = parse_size(key, value);
      m_b_set = true;
    } else if (key == "dims.m_r") {
      cfg.dims.m_r = parse_size(key, value);
      m_r_set = true;
    } else if (key == "geometry.bs") {
      cfg.geometry.bs_pos = parse_double(key, value);
    } else if (key == "geometry.rs") {
      cfg.geometry.rs_pos = parse_double(key, value);
    } else if (key == "geometry.user") {
      cfg.geometry.user_pos = parse_double(key, value);
    } else if (key == "geometry.tau") {
      cfg.geometry.tau = parse_double(key, value);
    } else if (key == "power.ps_db") {
      cfg.p_s_db = parse_double(key, value);
    } else if (key == "power.pr_db") {
      cfg.p_r_db = parse_double(key, value);
    } else if (key == "mc.realizations") {
      cfg.realizations = parse_size(key, value);
    } else if (key == "mc.seed") {
      cfg.master_seed = parse_u64(key, value);
    } else if (key == "schemes") {
      cfg.schemes = parse_scheme_list(value);
    } else if (key == "sweep.axis") {
      const auto axis = parse_axis(value);
      if (!axis || *axis == SweepAxis::None)
        throw ConfigError("config: sweep.axis: expected power | rs_position | users, got '" +
                          value + "'");
      cfg.sweep.axis = *axis;
    } else if (key == "sweep.values") {
      cfg.sweep.values.clear();
      for (const std::string& item : split_list(value))
        cfg.sweep.values.push_back(parse_double(key, item));
      if (cfg.sweep.values.empty()) throw ConfigError("config: sweep.values: empty list");
    } else if (key == "immse.backward") {
      if (value == "h1")
        cfg.scheme_options.immse_backward = ImmseBackward::H1;
      else if (value == "g")
        cfg.scheme_options.immse_backward = ImmseBackward::G;
      else
        throw ConfigError("config: immse.backward: expected h1 or g, got '" + value + "'");
    } else if (key == "rzf.alpha") {
      cfg.scheme_options.alpha = parse_double(key, value);
    } else if (key == "rzf.gamma") {
      cfg.scheme_options.gamma = parse_double(key, value);
    } else {
      throw ConfigError("config: unknown key '" + key + "'");
    }
  }

  // M_b / M_r default to K when only dims.k is given
  if (k_set && !m_b_set) cfg.dims.m_b = cfg.dims.k;
  if (k_set && !m_r_set) cfg.dims.m_r = cfg.dims.k;
  return cfg;
}

ExperimentConfig load_config_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("config: cannot open '" + path + "'");
  std::stringstream buffer;
  buffer << in.rdbuf();
  return parse_config_text(buffer.str());
}

void validate_experiment(const ExperimentConfig& cfg) {
  cfg.dims.validate();
  cfg.geometry.validate();
  if (cfg.realizations == 0) throw ConfigError("config: mc.realizations: must be >= 1");
  if (cfg.schemes.empty()) throw ConfigError("config: schemes: empty list");
  if (cfg.scheme_options.alpha && *cfg.scheme_options.alpha < 0.0)
    throw ConfigError("config: rzf.alpha: must be >= 0");
  if (cfg.scheme_options.gamma && *cfg.scheme_options.gamma < 0.0)
    throw ConfigError("config: rzf.gamma: must be >= 0");

  if (cfg.sweep.axis == SweepAxis::None) return;
  if (cfg.sweep.values.empty()) throw ConfigError("config: sweep.values: required for a sweep");
  for (std::size_t i = 1; i < cfg.sweep.values.size(); ++i)
    if (!(cfg.sweep.values[i] > cfg.sweep.values[i - 1]))
      throw ConfigError("config: sweep.values: must be strictly increasing");
  for (const double v : cfg.sweep.values) {
    switch (cfg.sweep.axis) {
      case SweepAxis::RsPosition: {
        Geometry g = cfg.geometry;
        g.rs_pos = v;
        g.validate();  // epsilon_dist and range checks per swept position
        break;
      }
      case SweepAxis::Users:
        if (std::round(v) != v || v < 1.0)
          throw ConfigError("config: sweep.values: users values must be positive integers");
        break;
      case SweepAxis::Power:
      case SweepAxis::None:
        break;
    }
  }
}

std::string render_config(const ExperimentConfig& cfg) {
  std::ostringstream os;
  os << "dims.k = " << cfg.dims.k << "\n";
  os << "dims.m_b = " << cfg.dims.m_b << "\n";
  os << "dims.m_r = " << cfg.dims.m_r << "\n";
  os << "geometry.bs = " << cfg.geometry.bs_pos << "\n";
  os << "geometry.rs = " << cfg.geometry.rs_pos << "\n";
  os << "geometry.user = " << cfg.geometry.user_pos << "\n";
  os << "geometry.tau = " << cfg.geometry.tau << "\n";
  os << "power.ps_db = " << cfg.p_s_db << "\n";
  os << "power.pr_db = " << cfg.p_r_db << "\n";
  os << "mc.realizations = " << cfg.realizations << "\n";
  os << "mc.seed = " << cfg.master_seed << "\n";
  os << "schemes = ";
  for (std::size_t i = 0; i < cfg.schemes.size(); ++i) {
    if (i) os << ", ";
    os << scheme_name(cfg.schemes[i]);
  }
  os << "\n";
  if (cfg.sweep.axis != SweepAxis::None) {
    os << "sweep.axis = " << axis_name(cfg.sweep.axis) << "\n";
    os << "sweep.values = ";
    for (std::size_t i = 0; i < cfg.sweep.values.size(); ++i) {
      if (i) os << ", ";
      os << cfg.sweep.values[i];
    }
    os << "\n";
  }
  os << "immse.backward = "
     << (cfg.scheme_options.immse_backward == ImmseBackward::H1 ? "h1" : "g") << "\n";
  if (cfg.scheme_options.alpha) os << "rzf.alpha = " << *cfg.scheme_options.alpha << "\n";
  if (cfg.scheme_options.gamma) os << "rzf.gamma = " << *cfg.scheme_options.gamma << "\n";
  return os.str();
}

}  // namespace relaysim
