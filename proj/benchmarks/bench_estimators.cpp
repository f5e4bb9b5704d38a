#include "sysid/bench/presets.hpp"
#include "sysid/estimators.hpp"

#include <benchmark/benchmark.h>

using namespace sysid;

namespace {

void BM_Simulate(benchmark::State& state) {
  const StateSpace sys = bench::preset("stable-random");
  const Index N = state.range(0);
  for (auto _ : state) benchmark::DoNotOptimize(simulate(sys, N, GaussianNoise{}, 1));
  state.SetItemsProcessed(state.iterations() * N);
}
BENCHMARK(BM_Simulate)->RangeMultiplier(4)->Range(1 << 10, 1 << 16);

void BM_Ols(benchmark::State& state) {
  const Trajectory traj =
      simulate(bench::preset("double-integrator"), state.range(0), GaussianNoise{}, 1);
  const auto data = est::build_regression_data(traj, 5, 4);
  for (auto _ : state) benchmark::DoNotOptimize(est::ols(data));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_Ols)->RangeMultiplier(4)->Range(1 << 10, 1 << 16);

void BM_Pfls(benchmark::State& state) {
  const Trajectory traj =
      simulate(bench::preset("double-integrator"), state.range(0), GaussianNoise{}, 1);
  const auto data = est::build_regression_data(traj, 5, 4);
  for (auto _ : state) benchmark::DoNotOptimize(est::pfls(data, 1.0));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_Pfls)->RangeMultiplier(4)->Range(1 << 10, 1 << 16);

void BM_SelectL(benchmark::State& state) {
  const Trajectory traj = simulate(bench::preset("double-integrator"), 1 << 13, GaussianNoise{}, 1);
  for (auto _ : state) benchmark::DoNotOptimize(est::select_L(traj, 5, state.range(0), 1.0, 0.1));
}
BENCHMARK(BM_SelectL)->DenseRange(1, 5, 2);

}  // namespace
