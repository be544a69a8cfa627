#include <benchmark/benchmark.h>

#include "sadp/dplut.hpp"
#include "sadp/generator.hpp"
#include "sadp/legalizer.hpp"

namespace {

sadp::Benchmark makeBenchmark(std::size_t cells, std::size_t lib_cells) {
  sadp::GeneratorOptions o;
  o.cells = cells;
  o.rows = static_cast<int>(std::max<std::size_t>(1, cells / 100));
  o.lib_cells = lib_cells;
  o.seed = 1;
  return sadp::generateBenchmark(o);
}

void BM_ProfileLibrary(benchmark::State& state) {
  const auto b = makeBenchmark(10, static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(sadp::profileLibrary(b.library));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_ProfileLibrary)->Arg(24)->Arg(64);

void BM_BuildDplut(benchmark::State& state) {
  const auto b = makeBenchmark(10, static_cast<std::size_t>(state.range(0)));
  const auto lib = sadp::profileLibrary(b.library);
  for (auto _ : state) benchmark::DoNotOptimize(sadp::buildDplut(lib, 1));
  state.SetItemsProcessed(state.iterations() * state.range(0) * state.range(0));
}
BENCHMARK(BM_BuildDplut)->Arg(24)->Arg(64)->Unit(benchmark::kMillisecond);

void BM_Legalize(benchmark::State& state) {
  const auto b = makeBenchmark(static_cast<std::size_t>(state.range(0)), 24);
  const auto lib = sadp::profileLibrary(b.library);
  const auto table = sadp::buildDplut(lib, 1);
  const sadp::Legalizer lg(lib, table);
  const auto mode = state.range(1) == 0 ? sadp::LegalizeMode::UB : sadp::LegalizeMode::B;
  for (auto _ : state) {
    state.PauseTiming();
    sadp::Placement p = b.placement;
    state.ResumeTiming();
    benchmark::DoNotOptimize(lg.legalize(p, mode));
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_Legalize)->Args({1000, 0})->Args({1000, 1})->Args({10000, 0})->Unit(benchmark::kMillisecond);

void BM_Audit(benchmark::State& state) {
  const auto b = makeBenchmark(static_cast<std::size_t>(state.range(0)), 24);
  const auto lib = sadp::profileLibrary(b.library);
  for (auto _ : state) benchmark::DoNotOptimize(sadp::auditPlacement(b.placement, lib, lib.params.s_dp));
}
BENCHMARK(BM_Audit)->Arg(1000)->Arg(10000)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
