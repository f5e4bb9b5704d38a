#pragma once

#include "sysid/bench/config.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace sysid::bench {

struct ResultRow {
  Index run_id = 0;
  std::string preset;
  std::string estimator;
  Index N = 0;
  Index T = 0;
  Index L = 0;
  double mu = 0.0;
  std::uint64_t seed = 0;
  double op_error = 0.0;
  double fro_error = 0.0;
  double opt_hat = 0.0;
  bool cond_ok = false;
  double wall_ms = 0.0;
  std::string error;
};

/// One row per (N, seed, estimator), ordered in that nesting. Each (N, seed)
/// pair shares one simulated trajectory across the estimators. Failures of a
/// single run land in the error column.
std::vector<ResultRow> run_sweep(const ExperimentConfig& config);

struct LowerBoundRow {
  Index N = 0;
  std::uint64_t seed = 0;
  double ols_op_error = 0.0;
  double gramian_over_N = 0.0;
  std::string error;
};

/// OLS error on noiseless trajectories next to gramian_sum_opnorm(sys, N) / N.
std::vector<LowerBoundRow> run_lowerbound(const StateSpace& sys, const std::vector<Index>& N_grid,
                                          const std::vector<std::uint64_t>& seeds, Index T,
                                          int threads = 0);

/// Worker count after applying SYSID_THREADS.
int resolve_threads(int requested, Index tasks);

}  // namespace sysid::bench
