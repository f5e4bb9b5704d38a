#include "sysid/bench/sweep.hpp"

#include "sysid/errors.hpp"
#include "sysid/estimators.hpp"
#include "sysid/polynomial.hpp"
#include "sysid/theory.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdlib>
#include <functional>
#include <string>
#include <thread>

namespace sysid::bench {

namespace {

void parallel_for(Index tasks, int threads, const std::function<void(Index)>& body) {
  if (threads <= 1 || tasks <= 1) {
    for (Index i = 0; i < tasks; ++i) body(i);
    return;
  }
  std::atomic<Index> next{0};
  std::vector<std::thread> pool;
  pool.reserve(static_cast<size_t>(threads));
  for (int w = 0; w < threads; ++w) {
    pool.emplace_back([&] {
      for (Index i = next++; i < tasks; i = next++) body(i);
    });
  }
  for (auto& t : pool) t.join();
}

struct Estimate {
  MarkovMatrix G;
  Index L = 0;
  double opt_hat = 0.0;
  bool cond_ok = false;
};

Estimate run_estimator(const ExperimentConfig& config, const EstimatorSpec& spec,
                       const Trajectory& traj) {
  using Kind = EstimatorSpec::Kind;
  Index L = config.L;
  if (spec.kind == Kind::SelectL) {
    L = est::select_L(traj, config.T, config.effective_L_max(), config.mu, config.delta).L;
  }
  const est::RegressionData data = est::build_regression_data(traj, config.T, L);
  Estimate out;
  out.L = L;
  switch (spec.kind) {
    case Kind::Ols:
      out.G = est::ols(data);
      break;
    case Kind::Pfls:
    case Kind::SelectL:
      out.G = est::pfls(data, config.mu).G;
      break;
    case Kind::FixedFilter:
      out.G = est::fixed_filter_estimate(
          data, filter_from_poly(MonicPolynomial(spec.poly), data.m, data.L));
      break;
  }
  out.opt_hat = analysis::opt_hat(data.Y, data.K, config.mu);
  out.cond_ok = est::check_conditioning(data).ok;
  return out;
}

}  // namespace

int resolve_threads(int requested, Index tasks) {
  int threads = requested > 0 ? requested : static_cast<int>(std::thread::hardware_concurrency());
  if (const char* env = std::getenv("SYSID_THREADS")) {
    const int cap = std::atoi(env);
    if (cap > 0) threads = std::min(threads, cap);
  }
  threads = std::max(threads, 1);
  return static_cast<int>(std::min<Index>(threads, std::max<Index>(tasks, 1)));
}

std::vector<ResultRow> run_sweep(const ExperimentConfig& config) {
  validate(config);
  const StateSpace& sys = config.sys();
  const MarkovMatrix G_true = markov_params(sys, config.T);
  const Index n_est = static_cast<Index>(config.estimators.size());
  const Index n_seed = static_cast<Index>(config.seeds.size());
  const Index groups = static_cast<Index>(config.N_grid.size()) * n_seed;

  std::vector<ResultRow> rows(static_cast<size_t>(groups * n_est));
  parallel_for(groups, resolve_threads(config.threads, groups), [&](Index g) {
    const Index N = config.N_grid[static_cast<size_t>(g / n_seed)];
    const std::uint64_t seed = config.seeds[static_cast<size_t>(g % n_seed)];
    std::optional<Trajectory> traj;
    std::string sim_error;
    try {
      traj = simulate(sys, N, config.noise, seed);
    } catch (const std::exception& e) {
      sim_error = e.what();
    }
    for (Index e = 0; e < n_est; ++e) {
      const auto& spec = config.estimators[static_cast<size_t>(e)];
      ResultRow& row = rows[static_cast<size_t>(g * n_est + e)];
      row.run_id = g * n_est + e;
      row.preset = config.preset;
      row.estimator = spec.name();
      row.N = N;
      row.T = config.T;
      row.L = config.L;
      row.mu = config.mu;
      row.seed = seed;
      if (!traj) {
        row.error = sim_error;
        continue;
      }
      const auto start = std::chrono::steady_clock::now();
      try {
        const Estimate est = run_estimator(config, spec, *traj);
        const Matrix diff = est.G.G - G_true.G;
        row.L = est.L;
        row.op_error = op_norm(diff);
        row.fro_error = diff.norm();
        row.opt_hat = est.opt_hat;
        row.cond_ok = est.cond_ok;
      } catch (const std::exception& ex) {
        row.error = ex.what();
      }
      if (config.record_wall_time) {
        row.wall_ms = std::chrono::duration<double, std::milli>(
                          std::chrono::steady_clock::now() - start)
                          .count();
      }
    }
  });
  return rows;
}

std::vector<LowerBoundRow> run_lowerbound(const StateSpace& sys, const std::vector<Index>& N_grid,
                                          const std::vector<std::uint64_t>& seeds, Index T,
                                          int threads) {
  if (N_grid.empty() || seeds.empty()) throw InvalidArgument("lowerbound: empty grid or seeds");
  const MarkovMatrix G_true = markov_params(sys, T);
  const Index n_seed = static_cast<Index>(seeds.size());
  const Index tasks = static_cast<Index>(N_grid.size()) * n_seed;
  std::vector<double> gram(N_grid.size());
  for (size_t i = 0; i < N_grid.size(); ++i) {
    gram[i] = analysis::gramian_sum_opnorm(sys, N_grid[i]) / static_cast<double>(N_grid[i]);
  }
  std::vector<LowerBoundRow> rows(static_cast<size_t>(tasks));
  parallel_for(tasks, resolve_threads(threads, tasks), [&](Index i) {
    LowerBoundRow& row = rows[static_cast<size_t>(i)];
    const size_t n_idx = static_cast<size_t>(i / n_seed);
    row.N = N_grid[n_idx];
    row.seed = seeds[static_cast<size_t>(i % n_seed)];
    row.gramian_over_N = gram[n_idx];
    try {
      const Trajectory traj = simulate(sys, row.N, NoNoise{}, row.seed);
      const auto data = est::build_regression_data(traj, T, 1);
      row.ols_op_error = op_norm(Matrix(est::ols(data).G - G_true.G));
    } catch (const std::exception& ex) {
      row.error = ex.what();
    }
  });
  return rows;
}

}  // namespace sysid::bench
