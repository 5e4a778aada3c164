// SPDX-License-Identifier: Apache-2.0

#pragma once

namespace relaysim {

/// Command-line front end. Exit status: 0 success, 2 invalid configuration or
/// usage, 3 runtime failure (discard budget, convergence).
int run_cli(int argc, const char* const* argv);

}  // namespace relaysim
