// SPDX-License-Identifier: Apache-2.0
//
// Compares the serial reference path of run_point against the OpenMP path,
// checks that both produce bit-identical statistics, and reports timings.

#include <algorithm>
#include <cstdio>
#include <cstdlib>
#include <string>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "relaysim/montecarlo.hpp"

namespace {

double now_seconds() {
#ifdef _OPENMP
  return omp_get_wtime();
#else
  return static_cast<double>(clock()) / CLOCKS_PER_SEC;
#endif
}

double median(std::vector<double> xs) {
  std::sort(xs.begin(), xs.end());
  return xs[xs.size() / 2];
}

bool same_stats(const relaysim::PointResult& a, const relaysim::PointResult& b) {
  if (a.per_scheme.size() != b.per_scheme.size() || a.discard_count != b.discard_count)
    return false;
  for (std::size_t s = 0; s < a.per_scheme.size(); ++s) {
    const auto& [ida, sa] = a.per_scheme[s];
    const auto& [idb, sb] = b.per_scheme[s];
    if (ida != idb || sa.mean_sum_exact != sb.mean_sum_exact ||
        sa.stderr_exact != sb.stderr_exact || sa.mean_sum_lower != sb.mean_sum_lower ||
        sa.stderr_lower != sb.stderr_lower)
      return false;
  }
  return true;
}

}  // namespace

int main(int argc, char** argv) {
  relaysim::ExperimentConfig cfg;
  int repeats = 5;
  int threads = 0;
  for (int i = 1; i < argc; ++i) {
    const std::string arg = argv[i];
    const auto next = [&]() -> const char* {
      if (i + 1 >= argc) {
        std::fprintf(stderr, "missing value for %s\n", arg.c_str());
        std::exit(2);
      }
      return argv[++i];
    };
    if (arg == "--realizations")
      cfg.realizations = std::strtoull(next(), nullptr, 10);
    else if (arg == "--repeats")
      repeats = std::atoi(next());
    else if (arg == "--threads")
      threads = std::atoi(next());
    else {
      std::fprintf(stderr, "usage: relaysim_bench [--realizations N] [--repeats R] [--threads T]\n");
      return 2;
    }
  }

  using relaysim::RunMode;
  // warm-up and the bit-exactness check
  const relaysim::PointResult serial_ref = relaysim::run_point(cfg, RunMode::Serial);
  const relaysim::PointResult parallel_ref = relaysim::run_point(cfg, RunMode::Parallel, threads);
  if (!same_stats(serial_ref, parallel_ref)) {
    std::fprintf(stderr, "FAIL: serial and parallel statistics differ\n");
    return 1;
  }

  std::vector<double> t_serial, t_parallel;
  for (int r = 0; r < repeats; ++r) {
    double t0 = now_seconds();
    (void)relaysim::run_point(cfg, RunMode::Serial);
    t_serial.push_back(now_seconds() - t0);
    t0 = now_seconds();
    (void)relaysim::run_point(cfg, RunMode::Parallel, threads);
    t_parallel.push_back(now_seconds() - t0);
  }

  int used_threads = 1;
#ifdef _OPENMP
  used_threads = threads > 0 ? threads : omp_get_max_threads();
#endif
  const double ms_serial = 1e3 * median(t_serial);
  const double ms_parallel = 1e3 * median(t_parallel);
  std::printf("realizations        %zu\n", cfg.realizations);
  std::printf("schemes             %zu\n", cfg.schemes.size());
  std::printf("repeats             %d (median reported)\n", repeats);
  std::printf("serial reference    %9.2f ms\n", ms_serial);
  std::printf("openmp (%2d threads) %9.2f ms\n", used_threads, ms_parallel);
  std::printf("speedup             %9.2fx\n", ms_serial / ms_parallel);
  std::printf("bit-identical stats yes\n");
  return 0;
}
