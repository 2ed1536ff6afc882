#include <benchmark/benchmark.h>

#include "invrel/enumerate.hpp"
#include "invrel/series.hpp"

using namespace invrel;

static void BM_CountAvoidersPruned(benchmark::State& state) {
    const auto p = parse_pattern(">,<=");
    const int n = static_cast<int>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(count_avoiders(p, n));
}
BENCHMARK(BM_CountAvoidersPruned)->DenseRange(8, 12, 2)->Unit(benchmark::kMillisecond);

static void BM_CountAvoidersExhaustive(benchmark::State& state) {
    const auto p = parse_pattern(">,<=");
    const int n = static_cast<int>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(count_avoiders_exhaustive(p, n));
}
BENCHMARK(BM_CountAvoidersExhaustive)->DenseRange(7, 9, 1)->Unit(benchmark::kMillisecond);

static void BM_OccurrenceProfiles(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(all_occurrence_profiles(n));
}
BENCHMARK(BM_OccurrenceProfiles)->DenseRange(7, 9, 1)->Unit(benchmark::kMillisecond);

static void BM_SeriesSqrt(benchmark::State& state) {
    const int order = static_cast<int>(state.range(0));
    const TruncatedSeries s(order, {1, -4, -4});
    for (auto _ : state) benchmark::DoNotOptimize(s.sqrt());
}
BENCHMARK(BM_SeriesSqrt)->RangeMultiplier(2)->Range(16, 128);

static void BM_CatalogBivariate(benchmark::State& state) {
    const int order = static_cast<int>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(gf_catalog("R_zt", order));
}
BENCHMARK(BM_CatalogBivariate)->DenseRange(8, 16, 4)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
