#include <benchmark/benchmark.h>

#include "cgflow/contour.hpp"
#include "cgflow/game.hpp"
#include "cgflow/levelset.hpp"

using namespace cgflow;

namespace {

CorrectorState reference_state(int n) {
  CorrectorState s;
  s.w = Grid2::sample(n, n, [](Vec2 x) { return 0.2 * stream(x); });
  s.p = {1.0, 0.0};
  s.d = 0.1;
  s.flow = CellularFlow(2.0);
  return s;
}

void BM_FlowVelocity(benchmark::State& state) {
  CellularFlow flow(2.0);
  Vec2 x{1.234, 2.345};
  for (auto _ : state) {
    benchmark::DoNotOptimize(flow.velocity(x));
    x.x += 1e-6;
  }
}
BENCHMARK(BM_FlowVelocity);

void BM_LevelsetStep(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  CorrectorState s = reference_state(n);
  const double dt = admissible_dt(s);
  for (auto _ : state) s = step(s, dt);
  state.SetItemsProcessed(state.iterations() * n * n);
}
BENCHMARK(BM_LevelsetStep)->Arg(64)->Arg(128)->Arg(256);

void BM_DpSweep(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  GameParams params;
  params.tau = 0.02;
  params.d = 0.1;
  params.n_angles = 32;
  params.flow = CellularFlow(2.0);
  ValueGrid value{Grid2(n, n, 0.0), {1.0, 0.0}, 0};
  for (auto _ : state) dp_sweep(value, params);
  state.SetItemsProcessed(state.iterations() * n * n);
}
BENCHMARK(BM_DpSweep)->Arg(32)->Arg(64);

void BM_ExtractFront(benchmark::State& state) {
  const auto g = Grid2::sample(256, 256, [](Vec2 x) {
    return torus_distance(x, {kPi, kPi}) - 1.0;
  });
  for (auto _ : state) benchmark::DoNotOptimize(extract_front(g, 0.0));
}
BENCHMARK(BM_ExtractFront);

}  // namespace

BENCHMARK_MAIN();
