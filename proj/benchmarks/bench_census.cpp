// Micro benchmarks for the exact-census path: counting DP, enumeration, and
// the graphicality criteria.

#include <benchmark/benchmark.h>

#include "mupart/counting.hpp"
#include "mupart/graphical.hpp"
#include "mupart/partition.hpp"
#include "mupart/restriction.hpp"

namespace {

void BM_CountIdentity(benchmark::State& state) {
    auto n = state.range(0);
    for (auto _ : state) {
        mupart::CountTable table(mupart::Restriction::identity());
        benchmark::DoNotOptimize(table.count(n));
    }
}
BENCHMARK(BM_CountIdentity)->Arg(100)->Arg(400)->Arg(1000);

void BM_CountBinary(benchmark::State& state) {
    auto n = state.range(0);
    for (auto _ : state) {
        mupart::CountTable table(mupart::Restriction::binary());
        benchmark::DoNotOptimize(table.count(n));
    }
}
BENCHMARK(BM_CountBinary)->Arg(1000)->Arg(10000);

void BM_Enumerate(benchmark::State& state) {
    auto n = state.range(0);
    std::uint64_t total = 0;
    for (auto _ : state) {
        mupart::for_each_partition(n, mupart::Restriction::identity(),
                                   [&](const std::vector<std::int64_t>&) { ++total; });
    }
    benchmark::DoNotOptimize(total);
    state.SetItemsProcessed(static_cast<std::int64_t>(total));
}
BENCHMARK(BM_Enumerate)->Arg(30)->Arg(40);

void BM_NashWilliams(benchmark::State& state) {
    // All partitions of n, re-tested each iteration.
    auto n = state.range(0);
    std::vector<std::vector<std::int64_t>> parts;
    mupart::for_each_partition(n, mupart::Restriction::identity(),
                               [&](const std::vector<std::int64_t>& p) { parts.push_back(p); });
    std::uint64_t graphical = 0;
    for (auto _ : state) {
        for (const auto& p : parts)
            if (mupart::is_graphical_nash_williams(p)) ++graphical;
    }
    benchmark::DoNotOptimize(graphical);
    state.SetItemsProcessed(static_cast<std::int64_t>(state.iterations()) *
                            static_cast<std::int64_t>(parts.size()));
}
BENCHMARK(BM_NashWilliams)->Arg(30)->Arg(40);

void BM_ErdosGallai(benchmark::State& state) {
    auto n = state.range(0);
    std::vector<std::vector<std::int64_t>> parts;
    mupart::for_each_partition(n, mupart::Restriction::identity(),
                               [&](const std::vector<std::int64_t>& p) { parts.push_back(p); });
    std::uint64_t graphical = 0;
    for (auto _ : state) {
        for (const auto& p : parts)
            if (mupart::is_graphical_erdos_gallai(p)) ++graphical;
    }
    benchmark::DoNotOptimize(graphical);
    state.SetItemsProcessed(static_cast<std::int64_t>(state.iterations()) *
                            static_cast<std::int64_t>(parts.size()));
}
BENCHMARK(BM_ErdosGallai)->Arg(30)->Arg(40);

}  // namespace

BENCHMARK_MAIN();
