// Serial reference census against the parallel census at several job counts.

#include <benchmark/benchmark.h>

#include "watchwalk/census.hpp"

namespace {

void BM_CensusSerial(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(watchwalk::census_serial(n));
}

void BM_CensusParallel(benchmark::State& state) {
  watchwalk::CensusOptions options;
  options.jobs = static_cast<int>(state.range(1));
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(watchwalk::census(n, options));
}

void BM_CanonicalForm(benchmark::State& state) {
  const auto corpus = watchwalk::enumerate_tournaments(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    for (const auto& t : corpus) benchmark::DoNotOptimize(watchwalk::canonical_form(t));
  }
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(corpus.size()));
}

}  // namespace

BENCHMARK(BM_CensusSerial)->Arg(8)->Arg(9)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_CensusParallel)
    ->ArgsProduct({{8, 9}, {1, 2, 4}})
    ->ArgNames({"n", "jobs"})
    ->Unit(benchmark::kMillisecond)
    ->UseRealTime();
BENCHMARK(BM_CanonicalForm)->Arg(7)->Arg(8)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
