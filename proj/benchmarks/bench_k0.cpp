#include <benchmark/benchmark.h>

#include "periodk/derived.hpp"
#include "periodk/grothendieck.hpp"

namespace {

void BM_EmpiricalK0(benchmark::State& state) {
    const auto alg = periodk::linear_a(3, periodk::Field::prime(5));
    const auto m = static_cast<std::size_t>(state.range(0));
    for (auto _ : state)
        benchmark::DoNotOptimize(periodk::empirical_k0_report(alg, m, periodk::SamplerOptions{200, 4, 7}));
}
BENCHMARK(BM_EmpiricalK0)->Arg(1)->Arg(2)->Arg(3)->Arg(4)->Unit(benchmark::kMillisecond);

void BM_OrthogonalSets(benchmark::State& state) {
    const auto alg = periodk::linear_a(static_cast<std::size_t>(state.range(0)), periodk::Field::rationals());
    for (auto _ : state) benchmark::DoNotOptimize(periodk::orthogonal_sets(alg, 2));
}
BENCHMARK(BM_OrthogonalSets)->Arg(3)->Arg(4)->Unit(benchmark::kMillisecond);

}  // namespace
BENCHMARK_MAIN();
