#include <benchmark/benchmark.h>

#include "homshape/homshape.hpp"

using namespace homshape;

namespace {

void BM_Srvt(benchmark::State& state) {
  const DiscreteCurve c = generate(Generator::fig2_c1, state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(srvt(c));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_Srvt)->RangeMultiplier(4)->Range(16, 1024)->Complexity();

void BM_ReductiveSrvt(benchmark::State& state) {
  Rng rng(1);
  const DiscreteCurve c = random_walk(ManifoldSpec::stiefel(5, 2), state.range(0), rng, 3.0);
  for (auto _ : state) benchmark::DoNotOptimize(reductive_srvt(c));
}
BENCHMARK(BM_ReductiveSrvt)->Arg(100)->Arg(400);

void BM_SrvtInverse(benchmark::State& state) {
  const AlgebraPath q = srvt(generate(Generator::fig2_c1, state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(srvt_inverse(q));
}
BENCHMARK(BM_SrvtInverse)->Arg(100)->Arg(400);

void BM_Reparametrise(benchmark::State& state) {
  const Index n = state.range(0);
  const AlgebraPath q1 = srvt(generate(Generator::fig2_c1, n));
  const AlgebraPath q2 = srvt(generate(Generator::fig2_c2, n));
  for (auto _ : state) benchmark::DoNotOptimize(reparametrise(q1, q2, {.window = state.range(1)}));
}
BENCHMARK(BM_Reparametrise)->Args({50, 10})->Args({100, 10})->Args({100, 20})->Args({50, 50})
    ->Unit(benchmark::kMillisecond);

void BM_Rodrigues(benchmark::State& state) {
  Rng rng(2);
  const SkewMatrix x = random_skew(3, rng, 2.0);
  for (auto _ : state) benchmark::DoNotOptimize(rodrigues_exp(x));
}
BENCHMARK(BM_Rodrigues);

void BM_Expm(benchmark::State& state) {
  Rng rng(3);
  const SkewMatrix x = random_skew(state.range(0), rng, 2.0);
  for (auto _ : state) benchmark::DoNotOptimize(expm(x));
}
BENCHMARK(BM_Expm)->Arg(3)->Arg(5)->Arg(8);

}  // namespace

BENCHMARK_MAIN();
