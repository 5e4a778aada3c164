// SPDX-License-Identifier: Apache-2.0

#include "relaysim/csv.hpp"

#include <cstdio>
#include <fstream>
#include <iomanip>
#include <sstream>

namespace relaysim {

std::string format_sig12(double x) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.12g", x);
  return buf;
}

std::string csv_header() {
  return "sweep_axis,sweep_value,scheme,mean_sum_exact,stderr_exact,mean_sum_lower,"
         "stderr_lower,realizations,discards,bound_violation_fraction";
}

std::string to_csv(const SweepResult& result) {
  std::ostringstream os;
  os << csv_header() << "\n";
  for (const PointResult& point : result.points) {
    for (const auto& [id, stats] : point.per_scheme) {
      os << axis_name(result.axis) << ',' << format_sig12(point.sweep_value) << ','
         << scheme_name(id) << ',' << format_sig12(stats.mean_sum_exact) << ','
         << format_sig12(stats.stderr_exact) << ',' << format_sig12(stats.mean_sum_lower) << ','
         << format_sig12(stats.stderr_lower) << ',' << point.realizations << ','
         << point.discard_count << ',' << format_sig12(stats.bound_violation_fraction) << "\n";
    }
  }
  return os.str();
}

std::string to_summary_table(const SweepResult& result) {
  std::ostringstream os;
  os << std::left << std::setw(12) << "axis" << std::setw(10) << "value" << std::setw(10)
     << "scheme" << std::setw(18) << "sum_exact" << std::setw(18) << "se_exact" << std::setw(18)
     << "sum_lower" << std::setw(18) << "se_lower" << std::setw(18) << "gap" << std::setw(12)
     << "viol" << std::setw(9) << "discards" << "\n";
  for (const PointResult& point : result.points) {
    for (const auto& [id, stats] : point.per_scheme) {
      os << std::left << std::setw(12) << axis_name(result.axis) << std::setw(10)
         << format_sig12(point.sweep_value) << std::setw(10) << scheme_name(id) << std::setw(18)
         << format_sig12(stats.mean_sum_exact) << std::setw(18)
         << format_sig12(stats.stderr_exact) << std::setw(18)
         << format_sig12(stats.mean_sum_lower) << std::setw(18)
         << format_sig12(stats.stderr_lower) << std::setw(18) << format_sig12(stats.mean_gap)
         << std::setw(12) << format_sig12(stats.bound_violation_fraction) << std::setw(9)
         << point.discard_count << "\n";
    }
  }
  return os.str();
}

void write_text_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open '" + path + "' for writing");
  out << content;
  if (!out) throw std::runtime_error("write failed for '" + path + "'");
}

}  // namespace relaysim
