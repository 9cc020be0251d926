#include "totalparts/exotica.hpp"
#include "totalparts/fairlab.hpp"

#include <benchmark/benchmark.h>
#include <omp.h>

using namespace totalparts;

namespace {

int threads() { return omp_get_max_threads(); }

void scan_reference(benchmark::State& state)
{
    const int kmax = static_cast<int>(state.range(0));
    for (auto _ : state)
        for (int k = 2; k <= kmax; ++k) benchmark::DoNotOptimize(s_scan_reference(3, k));
}

void scan_serial(benchmark::State& state)
{
    const int kmax = static_cast<int>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(s_scan_range(3, 2, kmax, 1));
}

void scan_parallel(benchmark::State& state)
{
    const int kmax = static_cast<int>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(s_scan_range(3, 2, kmax, threads()));
    state.counters["threads"] = threads();
}

void census_reference(benchmark::State& state)
{
    const int k = static_cast<int>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(exotic_search_reference(k, k, 1));
}

void census_serial(benchmark::State& state)
{
    const int k = static_cast<int>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(exotic_search(k, k, 1));
}

void census_parallel(benchmark::State& state)
{
    const int k = static_cast<int>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(exotic_search(k, k, threads()));
    state.counters["threads"] = threads();
}

void fair_pairs_serial(benchmark::State& state)
{
    for (auto _ : state) benchmark::DoNotOptimize(multiplicity_vectors_by_ell(static_cast<int>(state.range(0)), 1));
}

void fair_pairs_parallel(benchmark::State& state)
{
    for (auto _ : state)
        benchmark::DoNotOptimize(multiplicity_vectors_by_ell(static_cast<int>(state.range(0)), threads()));
}

} // namespace

BENCHMARK(scan_reference)->Arg(40)->Arg(80)->Unit(benchmark::kMillisecond);
BENCHMARK(scan_serial)->Arg(40)->Arg(80)->Arg(950)->Unit(benchmark::kMillisecond);
BENCHMARK(scan_parallel)->Arg(40)->Arg(80)->Arg(950)->Unit(benchmark::kMillisecond);
BENCHMARK(census_reference)->Arg(12)->Arg(16)->Unit(benchmark::kMillisecond);
BENCHMARK(census_serial)->Arg(12)->Arg(16)->Arg(20)->Unit(benchmark::kMillisecond);
BENCHMARK(census_parallel)->Arg(12)->Arg(16)->Arg(20)->Unit(benchmark::kMillisecond);
BENCHMARK(fair_pairs_serial)->Arg(16)->Unit(benchmark::kMillisecond);
BENCHMARK(fair_pairs_parallel)->Arg(16)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
