/* Microbenchmarks for the hot paths: the memoized recurrence, the
 * multiplicity DP, series expansion, and enumeration. */

#include <benchmark/benchmark.h>

#include "semifib/power_partitions.hpp"
#include "semifib/semifib.hpp"
#include "semifib/series.hpp"

using namespace semifib;

static void BM_sf_count_cold(benchmark::State& state) {
    const std::uint64_t m = static_cast<std::uint64_t>(state.range(0));
    const long long n = state.range(1);
    for (auto _ : state) {
        ModulusContext ctx(m);
        benchmark::DoNotOptimize(ctx.sf_count(n));
    }
}
BENCHMARK(BM_sf_count_cold)->Args({2, 10000})->Args({2, 100000})->Args({3, 100000});

static void BM_sf_count_sweep(benchmark::State& state) {
    const long long n_max = state.range(0);
    for (auto _ : state) {
        ModulusContext ctx(2);
        for (long long n = 0; n <= n_max; ++n)
            benchmark::DoNotOptimize(ctx.sf_count(n));
    }
}
BENCHMARK(BM_sf_count_sweep)->Arg(10000)->Arg(100000);

static void BM_nd_count_sweep(benchmark::State& state) {
    const std::uint64_t m = static_cast<std::uint64_t>(state.range(0));
    const std::uint64_t n_max = static_cast<std::uint64_t>(state.range(1));
    for (auto _ : state) {
        NdCounter counter(m);
        benchmark::DoNotOptimize(counter.counts_upto(n_max));
    }
}
BENCHMARK(BM_nd_count_sweep)->Args({2, 2000})->Args({3, 2000});

static void BM_series_G(benchmark::State& state) {
    const std::uint64_t m = static_cast<std::uint64_t>(state.range(0));
    const std::uint64_t order = static_cast<std::uint64_t>(state.range(1));
    for (auto _ : state)
        benchmark::DoNotOptimize(series_G(m, order));
}
BENCHMARK(BM_series_G)->Args({2, 2000})->Args({3, 2000})->Args({5, 2000});

static void BM_enumerate_sf(benchmark::State& state) {
    const std::uint64_t m = static_cast<std::uint64_t>(state.range(0));
    const std::uint64_t n = static_cast<std::uint64_t>(state.range(1));
    Budget budget;
    for (auto _ : state) {
        ModulusContext ctx(m);
        benchmark::DoNotOptimize(enumerate_sf(ctx, n, budget));
    }
}
BENCHMARK(BM_enumerate_sf)->Args({2, 60})->Args({3, 60});

BENCHMARK_MAIN();
