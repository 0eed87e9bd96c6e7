#include <benchmark/benchmark.h>

#include "dicke/berryphase.hpp"
#include "dicke/oracle.hpp"
#include "dicke/scaling.hpp"
#include "dicke/schroedinger1d.hpp"

using namespace dicke;

static void BM_SolveGround(benchmark::State& state) {
  const QGrid g(10.0, static_cast<std::size_t>(state.range(0)));
  const auto v = g.sample([](double q) { return 0.25 * q * q * q * q - q * q; });
  for (auto _ : state) benchmark::DoNotOptimize(solve_ground(v, g).energy);
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_SolveGround)->Arg(1001)->Arg(4001)->Arg(16001)->Arg(64001)->Complexity();

static void BM_BerryPhase(benchmark::State& state) {
  const ModelParams p(static_cast<int>(state.range(0)), 10.0, 1.0);
  for (auto _ : state) benchmark::DoNotOptimize(berry_phase(p).gamma);
}
BENCHMARK(BM_BerryPhase)->Arg(4)->Arg(256)->Arg(8192)->Unit(benchmark::kMillisecond);

static void BM_QuarticConstants(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(quartic_constants().c0);
}
BENCHMARK(BM_QuarticConstants)->Unit(benchmark::kMillisecond);

static void BM_OracleGroundState(benchmark::State& state) {
  const ModelParams p(4, 10.0, 0.5);
  const FockSpinBasis b(static_cast<int>(state.range(0)), 4);
  const auto h = build_hamiltonian(p, b);
  GroundStateOptions o;
  o.force_lanczos = state.range(1) != 0;
  for (auto _ : state) benchmark::DoNotOptimize(ground_state(h, o).energy);
}
BENCHMARK(BM_OracleGroundState)
    ->Args({64, 0})
    ->Args({64, 1})
    ->Args({400, 1})
    ->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
