#include <benchmark/benchmark.h>

#include <toricfan/charts.hpp>
#include <toricfan/deform.hpp>
#include <toricfan/gallery.hpp>
#include <toricfan/validity.hpp>

using namespace toricfan;

static void BM_ValidateCpn(benchmark::State& state) {
  const TopologicalFan fan = cpn(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(validate(fan).valid());
}
BENCHMARK(BM_ValidateCpn)->Arg(2)->Arg(3)->Arg(4);

static void BM_ValidatePerturbed(benchmark::State& state) {
  const TopologicalFan fan = gallery("perturbed(hirzebruch(1),3)");
  for (auto _ : state) benchmark::DoNotOptimize(validate(fan).valid());
}
BENCHMARK(BM_ValidatePerturbed);

static void BM_CocycleExact(benchmark::State& state) {
  const TopologicalFan fan = cpn(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(cocycle_check(fan).pass());
}
BENCHMARK(BM_CocycleExact)->Arg(2)->Arg(3)->Unit(benchmark::kMillisecond);

static void BM_Transition(benchmark::State& state) {
  const TopologicalFan fan = gallery("perturbed(cp2,5)");
  for (auto _ : state) benchmark::DoNotOptimize(transition(fan, {0, 1}, {1, 2}));
}
BENCHMARK(BM_Transition);

static void BM_Niceify(benchmark::State& state) {
  const TopologicalFan fan = gallery("perturbed(hirzebruch(2)," + std::to_string(state.range(0)) + ")");
  for (auto _ : state) benchmark::DoNotOptimize(niceify(fan).n);
}
BENCHMARK(BM_Niceify)->Arg(1)->Arg(2)->Unit(benchmark::kMillisecond);
BENCHMARK_MAIN();
