#include <benchmark/benchmark.h>

#include "iasi/claims.hpp"
#include "iasi/families.hpp"
#include "iasi/intset.hpp"
#include "iasi/labeling.hpp"
#include "iasi/ops.hpp"
#include "iasi/sparing.hpp"

namespace {

void SparingExactRandom(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  auto g = iasi::random_graph(n, 0.5, 42);
  for (auto _ : state) benchmark::DoNotOptimize(iasi::sparing_exact(g, 64).value);
  state.counters["explored"] = static_cast<double>(iasi::sparing_exact(g, 64).explored);
}
BENCHMARK(SparingExactRandom)->DenseRange(10, 40, 10)->Unit(benchmark::kMicrosecond);

void SparingExactSunSquared(benchmark::State& state) {
  auto g = iasi::power(iasi::generate(iasi::Family::complete_sun, {state.range(0)}), 2).graph;
  for (auto _ : state) benchmark::DoNotOptimize(iasi::sparing_exact(g).value);
}
BENCHMARK(SparingExactSunSquared)->DenseRange(4, 10, 2)->Unit(benchmark::kMicrosecond);

void SparingBruteforce(benchmark::State& state) {
  auto g = iasi::random_graph(static_cast<std::size_t>(state.range(0)), 0.5, 42);
  for (auto _ : state) benchmark::DoNotOptimize(iasi::sparing_bruteforce(g).value);
}
BENCHMARK(SparingBruteforce)->DenseRange(8, 16, 4)->Unit(benchmark::kMicrosecond);

void SparingHeuristic(benchmark::State& state) {
  auto g = iasi::random_graph(static_cast<std::size_t>(state.range(0)), 0.1, 7);
  for (auto _ : state) benchmark::DoNotOptimize(iasi::sparing_heuristic(g).value);
}
BENCHMARK(SparingHeuristic)->RangeMultiplier(4)->Range(16, 1024)->Unit(benchmark::kMicrosecond);

void ConstructAndVerify(benchmark::State& state) {
  auto g = iasi::random_graph(static_cast<std::size_t>(state.range(0)), 0.3, 3);
  auto w = iasi::sparing_exact(g, 64).witness_nonmono;
  for (auto _ : state) benchmark::DoNotOptimize(iasi::verify(g, iasi::construct_weak(g, w)).mono_edge_count);
}
BENCHMARK(ConstructAndVerify)->DenseRange(10, 30, 10)->Unit(benchmark::kMicrosecond);

void MianChowla(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(iasi::mian_chowla(static_cast<std::size_t>(state.range(0))));
}
BENCHMARK(MianChowla)->RangeMultiplier(4)->Range(16, 256);

void ClaimTable(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(iasi::status_table({}, {}, {}, 1).claims.size());
}
BENCHMARK(ClaimTable)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
