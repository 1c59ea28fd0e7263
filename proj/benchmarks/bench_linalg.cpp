#include <algorithm>

#include <benchmark/benchmark.h>

#include "periodk/matrix.hpp"
#include "periodk/rng.hpp"
#include "periodk/smith.hpp"

namespace {

periodk::Matrix random_matrix(const periodk::Field& f, std::size_t n, std::uint64_t seed) {
    periodk::Rng rng(seed);
    periodk::Matrix m(f, n, n);
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c < n; ++c) m.set(r, c, rng.scalar(f));
    return m;
}

void BM_RrefPrime(benchmark::State& state) {
    const auto m = random_matrix(periodk::Field::prime(5), static_cast<std::size_t>(state.range(0)), 1);
    for (auto _ : state) benchmark::DoNotOptimize(periodk::rref(m));
}
BENCHMARK(BM_RrefPrime)->Arg(8)->Arg(32)->Arg(64);

void BM_RrefRational(benchmark::State& state) {
    const auto m = random_matrix(periodk::Field::rationals(), static_cast<std::size_t>(state.range(0)), 1);
    for (auto _ : state) benchmark::DoNotOptimize(periodk::rref(m));
}
BENCHMARK(BM_RrefRational)->Arg(8)->Arg(16)->Arg(32);

// relation matrices from the sampler are sparse with many unit entries
periodk::SparseColumns relation_like(std::size_t rows, std::size_t cols, std::uint64_t seed) {
    periodk::Rng rng(seed);
    periodk::SparseColumns a{rows, std::vector<std::vector<std::pair<std::size_t, mpz_class>>>(cols)};
    for (auto& col : a.columns) {
        std::vector<std::size_t> picked;
        for (int k = 0; k < 3; ++k) picked.push_back(static_cast<std::size_t>(rng.uniform(0, static_cast<long>(rows) - 1)));
        std::sort(picked.begin(), picked.end());
        picked.erase(std::unique(picked.begin(), picked.end()), picked.end());
        for (auto r : picked) col.emplace_back(r, mpz_class(rng.chance(1, 2) ? 1 : -1));
    }
    return a;
}

void BM_SparseCokernel(benchmark::State& state) {
    const auto n = static_cast<std::size_t>(state.range(0));
    const auto a = relation_like(n, n + n / 2, 3);
    for (auto _ : state) benchmark::DoNotOptimize(periodk::cokernel_invariants(a));
}
BENCHMARK(BM_SparseCokernel)->Arg(200)->Arg(600)->Unit(benchmark::kMillisecond);

void BM_DenseSmith(benchmark::State& state) {
    periodk::Rng rng(5);
    const auto n = static_cast<std::size_t>(state.range(0));
    periodk::IntMatrix a(n, n);
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c < n; ++c) a(r, c) = rng.uniform(-9, 9);
    for (auto _ : state) benchmark::DoNotOptimize(periodk::smith_normal_form(a));
}
BENCHMARK(BM_DenseSmith)->Arg(8)->Arg(24);

}  // namespace
