// SPDX-License-Identifier: Apache-2.0

#include "relaysim/cli.hpp"

int main(int argc, char** argv) { return relaysim::run_cli(argc, argv); }
