// Micro benchmarks for the numeric layer: the saddle solver, the Gumbel
// quadrature, and the geometric sampler.

#include <benchmark/benchmark.h>

#include "mupart/asymptotics.hpp"
#include "mupart/boltzmann.hpp"
#include "mupart/restriction.hpp"

namespace {

void BM_SolveQ(benchmark::State& state) {
    auto n = state.range(0);
    for (auto _ : state) {
        auto params = mupart::solve_q(n, mupart::Restriction::identity(), 1e-9);
        benchmark::DoNotOptimize(params.q);
    }
}
BENCHMARK(BM_SolveQ)->Arg(1000)->Arg(10000)->Arg(100000);

void BM_GumbelExpect(benchmark::State& state) {
    auto k = state.range(0);
    for (auto _ : state) {
        double v = mupart::gumbel_expect(k, [](double x) { return x * x * x; });
        benchmark::DoNotOptimize(v);
    }
}
BENCHMARK(BM_GumbelExpect)->Arg(1)->Arg(100)->Arg(1000000);

void BM_FractionRatioSmooth(benchmark::State& state) {
    auto n = state.range(0);
    for (auto _ : state) {
        double v = mupart::fraction_ratio(n, mupart::Restriction::smooth_cutoff());
        benchmark::DoNotOptimize(v);
    }
}
BENCHMARK(BM_FractionRatioSmooth)->Arg(1000)->Arg(1000000);

void BM_FreeSample(benchmark::State& state) {
    auto params = mupart::solve_q(state.range(0), mupart::Restriction::identity(), 1e-9);
    std::uint64_t attempt = 0;
    std::int64_t weight = 0;
    for (auto _ : state) {
        auto mv = mupart::sample(params, 99, attempt++);
        weight += mv.weight();
    }
    benchmark::DoNotOptimize(weight);
    state.SetItemsProcessed(static_cast<std::int64_t>(state.iterations()) *
                            static_cast<std::int64_t>(params.parts.size()));
}
BENCHMARK(BM_FreeSample)->Arg(1000)->Arg(10000);

void BM_ConditionedSample(benchmark::State& state) {
    auto params = mupart::solve_q(state.range(0), mupart::Restriction::binary(), 1e-9);
    std::uint64_t seed = 7;
    for (auto _ : state) {
        auto p = mupart::sample_conditioned(params, 0.02, 10'000'000, seed++);
        benchmark::DoNotOptimize(p.parts.data());
    }
}
BENCHMARK(BM_ConditionedSample)->Arg(100)->Arg(400);

}  // namespace

BENCHMARK_MAIN();
