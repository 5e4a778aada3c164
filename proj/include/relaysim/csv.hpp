// SPDX-License-Identifier: Apache-2.0
//
// CSV emission and the human-readable summary table. Both render the same
// SweepResult values with the same 12-significant-digit formatter, so the two
// outputs can never drift apart.

#pragma once

#include <string>

#include "relaysim/montecarlo.hpp"

namespace relaysim {

/// Shortest form with up to 12 significant digits ("%.12g").
std::string format_sig12(double x);

std::string csv_header();
std::string to_csv(const SweepResult& result);
std::string to_summary_table(const SweepResult& result);

void write_text_file(const std::string& path, const std::string& content);

}  // namespace relaysim
