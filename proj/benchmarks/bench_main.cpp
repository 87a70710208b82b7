#include <benchmark/benchmark.h>

#include "chilab/asymptotics.hpp"
#include "chilab/coloring.hpp"
#include "chilab/coupling.hpp"
#include "chilab/graph.hpp"
#include "chilab/independent_sets.hpp"

using namespace chilab;

namespace {

void BM_SampleGnpHalf(benchmark::State& state) {
    const auto n = static_cast<std::size_t>(state.range(0));
    std::uint64_t stream = 0;
    for (auto _ : state) benchmark::DoNotOptimize(graph::sample_gnp_half(n, 1, stream++));
    state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(n * (n - 1) / 2));
}
BENCHMARK(BM_SampleGnpHalf)->Arg(200)->Arg(1000)->Arg(4000);

void BM_CountKSets(benchmark::State& state) {
    const auto n = static_cast<std::size_t>(state.range(0));
    const auto k = static_cast<std::size_t>(state.range(1));
    std::uint64_t stream = 0;
    for (auto _ : state) {
        state.PauseTiming();
        const auto g = graph::sample_gnp_half(n, 7, stream++);
        state.ResumeTiming();
        benchmark::DoNotOptimize(graph::count_independent_ksets(g, k).count);
    }
}
BENCHMARK(BM_CountKSets)->Args({100, 9})->Args({200, 11})->Unit(benchmark::kMillisecond);

void BM_ChromaticNumber(benchmark::State& state) {
    const auto n = static_cast<std::size_t>(state.range(0));
    std::uint64_t stream = 0;
    for (auto _ : state) {
        state.PauseTiming();
        const auto g = graph::sample_gnp_half(n, 3, stream++);
        state.ResumeTiming();
        benchmark::DoNotOptimize(graph::chromatic_number(g).upper);
    }
}
BENCHMARK(BM_ChromaticNumber)->Arg(30)->Arg(50)->Arg(60)->Unit(benchmark::kMillisecond);

void BM_MaxIndependentSet(benchmark::State& state) {
    const auto g = graph::sample_gnp_half(static_cast<std::size_t>(state.range(0)), 5, 0);
    for (auto _ : state) benchmark::DoNotOptimize(graph::independence_number(g));
}
BENCHMARK(BM_MaxIndependentSet)->Arg(200)->Arg(400)->Unit(benchmark::kMillisecond);

void BM_ConditionedPair(benchmark::State& state) {
    std::uint64_t seed = 1;
    for (auto _ : state) benchmark::DoNotOptimize(coupling::build_conditioned_pair(40, 8, 2, 1, seed++).attempts);
}
BENCHMARK(BM_ConditionedPair)->Unit(benchmark::kMillisecond);

void BM_Profile(benchmark::State& state) {
    const BigInt n = parse_bigint(state.range(0) == 0 ? "10^6" : "10^30");
    for (auto _ : state) benchmark::DoNotOptimize(asymptotics::profile(n).x);
}
BENCHMARK(BM_Profile)->Arg(0)->Arg(1)->Unit(benchmark::kMicrosecond);

void BM_Ledger(benchmark::State& state) {
    for (auto _ : state) benchmark::DoNotOptimize(asymptotics::ledger(0.2, BigInt(1'000'000), 1'000'000).M);
}
BENCHMARK(BM_Ledger)->Unit(benchmark::kMillisecond);

}  // namespace
BENCHMARK_MAIN();
