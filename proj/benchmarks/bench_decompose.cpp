#include <benchmark/benchmark.h>

#include "sumdilates/decompose.hpp"
#include "sumdilates/exponents.hpp"
#include "sumdilates/rng.hpp"

using namespace sumdilates;

namespace {

BipartiteGraph random_graph(std::uint64_t seed, int m, int n) {
    Rng rng(seed);
    BipartiteGraph g(m, n);
    for (int u = 0; u < m; ++u) {
        for (int v = 0; v < n; ++v) {
            if (rng.bounded(2)) g.add_edge(u, v);
        }
    }
    return g;
}

} // namespace

static void BM_GreedyRandomGraph(benchmark::State& state) {
    const int side = static_cast<int>(state.range(0));
    const BipartiteGraph g = random_graph(11, side, side);
    for (auto _ : state) {
        benchmark::DoNotOptimize(greedy_decomposition(g));
    }
    state.counters["edges"] = static_cast<double>(g.edge_count());
}
BENCHMARK(BM_GreedyRandomGraph)->Arg(50)->Arg(100)->Arg(200)->Arg(400)->Unit(benchmark::kMillisecond);

static void BM_StarDecomposition(benchmark::State& state) {
    const BipartiteGraph g = random_graph(12, 400, 400);
    for (auto _ : state) {
        benchmark::DoNotOptimize(star_decomposition(g, StarOrientation::rows));
    }
}
BENCHMARK(BM_StarDecomposition)->Unit(benchmark::kMillisecond);

static void BM_ExactSmallGraph(benchmark::State& state) {
    // 12-edge instance at the default exact-solver limit
    BipartiteGraph g = random_graph(13, 4, 4);
    while (g.edge_count() > 12) {
        g = random_graph(13 + static_cast<std::uint64_t>(g.edge_count()), 4, 4);
    }
    for (auto _ : state) {
        benchmark::DoNotOptimize(exact_min_weight_decomposition(g));
    }
}
BENCHMARK(BM_ExactSmallGraph);

static void BM_ExponentReport16x65535(benchmark::State& state) {
    const std::vector<std::int64_t> lambdas(16, 65535);
    for (auto _ : state) {
        benchmark::DoNotOptimize(exponent_report(lambdas));
    }
}
BENCHMARK(BM_ExponentReport16x65535)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
