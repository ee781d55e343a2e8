#include <benchmark/benchmark.h>

#include "zuck/baseline.hpp"
#include "zuck/lowerbound.hpp"
#include "zuck/zc.hpp"
#include "zuck/zc10.hpp"

using namespace zuck;

static void BM_Brute(benchmark::State& state) {
    int n = static_cast<int>(state.range(0));
    for (auto _ : state) {
        auto r = count_brute(Base(10), n);
        benchmark::DoNotOptimize(r.count);
    }
}
BENCHMARK(BM_Brute)->DenseRange(4, 7);

static void BM_Multiples(benchmark::State& state) {
    int n = static_cast<int>(state.range(0));
    for (auto _ : state) {
        auto r = count_multiples(Base(10), n, 0.5);
        benchmark::DoNotOptimize(r.count);
    }
}
BENCHMARK(BM_Multiples)->DenseRange(4, 7);

static void BM_MeetInTheMiddle(benchmark::State& state) {
    int n = static_cast<int>(state.range(0));
    for (auto _ : state) {
        auto r = count_mitm(Base(10), n);
        benchmark::DoNotOptimize(r.count);
    }
}
BENCHMARK(BM_MeetInTheMiddle)->DenseRange(4, 8);

static void BM_CompositionCounter(benchmark::State& state) {
    int n = static_cast<int>(state.range(0));
    uint64_t nodes = 0;
    for (auto _ : state) {
        auto r = zuckerman_count(Base(10), n);
        benchmark::DoNotOptimize(r.count);
        nodes = r.stats.nodes;
    }
    state.counters["nodes"] = static_cast<double>(nodes);
}
BENCHMARK(BM_CompositionCounter)->DenseRange(6, 10);

static void BM_CompositionCounter10(benchmark::State& state) {
    int n = static_cast<int>(state.range(0));
    for (auto _ : state) {
        auto r = zuckerman_count_10(n);
        benchmark::DoNotOptimize(r.count);
    }
}
BENCHMARK(BM_CompositionCounter10)->DenseRange(6, 10);

static void BM_CompositionStream(benchmark::State& state) {
    int n = static_cast<int>(state.range(0));
    for (auto _ : state) {
        size_t jobs = 0;
        for_each_composition(Base(12), n, true,
                             [&](const DigitComposition&, u128) { ++jobs; });
        benchmark::DoNotOptimize(jobs);
    }
}
BENCHMARK(BM_CompositionStream)->DenseRange(8, 12);

static void BM_DeltaDp(benchmark::State& state) {
    int ell = static_cast<int>(state.range(0));
    for (auto _ : state) {
        auto r = compute_delta(ell, DeltaMethod::dp, false);
        benchmark::DoNotOptimize(r.delta_num);
    }
}
BENCHMARK(BM_DeltaDp)->DenseRange(14, 20, 2)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
