#include "sysid/bench/presets.hpp"
#include "sysid/phase_rank.hpp"
#include "sysid/realization.hpp"

#include <benchmark/benchmark.h>

using namespace sysid;

namespace {

void BM_HoKalman(benchmark::State& state) {
  const StateSpace sys = bench::preset("stable-random");
  const MarkovMatrix G = markov_params(sys, state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(realize::ho_kalman(G, sys.n()));
}
BENCHMARK(BM_HoKalman)->Arg(9)->Arg(33)->Arg(129);

void BM_PhaseRank(benchmark::State& state) {
  JordanSpec spec;
  const int points = static_cast<int>(state.range(0));
  for (int j = 0; j < points; ++j) {
    spec.blocks.push_back({std::polar(1.0, 2.0 * 3.141592653589793 * j / points), 1});
  }
  for (auto _ : state) benchmark::DoNotOptimize(phase_rank(spec, 1.0, 2));
}
BENCHMARK(BM_PhaseRank)->Arg(2)->Arg(4)->Arg(6)->Arg(8);

}  // namespace
