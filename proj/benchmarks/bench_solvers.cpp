#include <benchmark/benchmark.h>

#include <vector>

#include "ebubble/solvers.hpp"
#include "ebubble/sweep.hpp"

using namespace ebubble;

namespace {

const auto& precise() { return units::constants(units::ProfileName::precise); }

void BM_FindStationaryPoints(benchmark::State& state) {
  double p = -0.5;
  for (auto _ : state) {
    benchmark::DoNotOptimize(solvers::find_stationary_points(p));
    p = p < -1.0 ? -0.5 : p - 1e-3;
  }
}
BENCHMARK(BM_FindStationaryPoints);

void BM_CriticalPressureNumeric(benchmark::State& state) {
  const auto m = model::ZeroPointModel::uncertainty_rounded();
  for (auto _ : state) benchmark::DoNotOptimize(solvers::critical_pressure_numeric(0.004, m, precise()));
}
BENCHMARK(BM_CriticalPressureNumeric);

void BM_EnergyCurves(benchmark::State& state) {
  const auto m = model::ZeroPointModel::infinite_well();
  const auto grid = sweep::make_grid(5e-10, 2e-8, static_cast<std::size_t>(state.range(0)),
                                     sweep::GridSpacing::linear);
  std::vector<double> pressures;
  for (double bar : sweep::kDefaultCurvePressuresBar) pressures.push_back(bar * 1e5);
  for (auto _ : state)
    benchmark::DoNotOptimize(sweep::energy_curves(grid, pressures, sweep::kDefaultCurveGamma, m, precise()));
  state.SetItemsProcessed(state.iterations() * state.range(0) * static_cast<long>(pressures.size()));
}
BENCHMARK(BM_EnergyCurves)->Arg(400)->Arg(4000);

void BM_GammaScan(benchmark::State& state) {
  const auto m = model::ZeroPointModel::uncertainty_exact();
  const auto gammas = sweep::make_grid(1e-5, 1e-1, static_cast<std::size_t>(state.range(0)),
                                       sweep::GridSpacing::log);
  for (auto _ : state) benchmark::DoNotOptimize(sweep::gamma_scan(gammas, m, precise()));
}
BENCHMARK(BM_GammaScan)->Arg(10)->Arg(100);

}  // namespace

BENCHMARK_MAIN();
