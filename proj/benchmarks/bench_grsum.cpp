#include <benchmark/benchmark.h>

#include "grsum/grs.hpp"
#include "grsum/qpoly.hpp"
#include "grsum/svt.hpp"
#include "grsum/trig.hpp"

using namespace grsum;

static void BM_ForwardTable(benchmark::State& state) {
    const auto k = state.range(0);
    for (auto _ : state) {
        std::size_t entries = 0;
        for_each_forward_row(k, SumKind::coprime, [&](std::int64_t, std::span<const Rational> row) {
            entries += row.size();
        });
        benchmark::DoNotOptimize(entries);
    }
    state.SetItemsProcessed(state.iterations() * k * k);
    state.SetComplexityN(k);
}
BENCHMARK(BM_ForwardTable)->RangeMultiplier(2)->Range(16, 512)->Complexity(benchmark::oNSquared);

static void BM_RemainderPoly(benchmark::State& state) {
    const auto k = static_cast<std::size_t>(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(remainder_poly(k, k / 2, 1));
    }
}
BENCHMARK(BM_RemainderPoly)->RangeMultiplier(2)->Range(16, 256);

static void BM_EnumerateSvt(benchmark::State& state) {
    const auto n = state.range(0);
    const auto workers = static_cast<unsigned>(state.range(1));
    for (auto _ : state) {
        benchmark::DoNotOptimize(enumerate_svt({n, 2 * n + 1, 3, 0}, workers));
    }
    state.SetItemsProcessed(state.iterations() * (std::int64_t{1} << n));
}
BENCHMARK(BM_EnumerateSvt)->Args({16, 1})->Args({20, 1})->Args({20, 4})->Args({24, 4})->UseRealTime()->Unit(benchmark::kMillisecond);

static void BM_FrequencySigma(benchmark::State& state) {
    const auto k = state.range(0);
    for (auto _ : state) {
        benchmark::DoNotOptimize(frequency_sigma({k, k / 2, 1, true}));
    }
}
BENCHMARK(BM_FrequencySigma)->RangeMultiplier(4)->Range(16, 1024);
BENCHMARK_MAIN();
