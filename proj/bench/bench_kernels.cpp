// Parallel kernels against their serial references.

#include <benchmark/benchmark.h>

#include "sandpilion/oracle.hpp"
#include "sandpilion/sweep.hpp"

using namespace sandpilion;

namespace {

Multigraph bench_graph(int p) { return cone(build_bicoconut({p, 2, 2})); }

void BM_BruteForceParallel(benchmark::State& state) {
    const auto g = bench_graph(static_cast<int>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(brute_force_tau(g));
    state.counters["edges"] = static_cast<double>(g.edge_count());
}

void BM_BruteForceSerial(benchmark::State& state) {
    const auto g = bench_graph(static_cast<int>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(brute_force_tau_serial(g));
    state.counters["edges"] = static_cast<double>(g.edge_count());
}

SweepSpec bench_spec(int p_max) {
    SweepSpec spec;
    spec.p = {1, p_max};
    spec.s1 = {1, 3};
    spec.s2 = {1, 3};
    return spec;
}

void BM_SweepParallel(benchmark::State& state) {
    const auto spec = bench_spec(static_cast<int>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(run_sweep(spec));
}

void BM_SweepSerial(benchmark::State& state) {
    const auto spec = bench_spec(static_cast<int>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(run_sweep_serial(spec));
}

}  // namespace

BENCHMARK(BM_BruteForceParallel)->DenseRange(2, 4)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_BruteForceSerial)->DenseRange(2, 4)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_SweepParallel)->Arg(3)->Arg(5)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_SweepSerial)->Arg(3)->Arg(5)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
