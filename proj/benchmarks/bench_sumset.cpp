#include <benchmark/benchmark.h>

#include <vector>

#include "sumdilates/int_set.hpp"
#include "sumdilates/rng.hpp"

using namespace sumdilates;

namespace {

IntSet random_set(std::uint64_t seed, std::size_t size, std::int64_t universe) {
    Rng rng(seed);
    std::vector<std::int64_t> v;
    v.reserve(size * 2);
    while (v.size() < size * 2) {
        v.push_back(static_cast<std::int64_t>(rng.bounded(static_cast<std::uint64_t>(universe))));
    }
    IntSet s(std::move(v));
    return s;
}

} // namespace

static void BM_SumsetDense(benchmark::State& state) {
    const IntSet a = random_set(1, static_cast<std::size_t>(state.range(0)), 4 * state.range(0));
    const IntSet b = random_set(2, static_cast<std::size_t>(state.range(0)), 4 * state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(sumset(a, b));
    }
}
BENCHMARK(BM_SumsetDense)->Arg(64)->Arg(512)->Arg(4096);

static void BM_SumsetSparse(benchmark::State& state) {
    // value range far exceeds |a| * |b|, forcing the merge strategy
    const IntSet a = random_set(3, static_cast<std::size_t>(state.range(0)), INT64_C(1) << 40);
    const IntSet b = random_set(4, static_cast<std::size_t>(state.range(0)), INT64_C(1) << 40);
    for (auto _ : state) {
        benchmark::DoNotOptimize(sumset(a, b));
    }
}
BENCHMARK(BM_SumsetSparse)->Arg(64)->Arg(512);

static void BM_DilateSumChain(benchmark::State& state) {
    const IntSet a = random_set(5, 32, 2000);
    const std::vector<std::int64_t> lambdas{3, -5, 6, 11};
    for (auto _ : state) {
        benchmark::DoNotOptimize(dilate_sum(lambdas, a));
    }
}
BENCHMARK(BM_DilateSumChain);

static void BM_DoublingConstant(benchmark::State& state) {
    const IntSet a = random_set(6, static_cast<std::size_t>(state.range(0)), 10 * state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(doubling_constant(a));
    }
}
BENCHMARK(BM_DoublingConstant)->Arg(256)->Arg(2048);
