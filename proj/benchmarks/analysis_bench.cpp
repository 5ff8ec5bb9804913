#include <benchmark/benchmark.h>

#include "convexdim/analysis.hpp"
#include "convexdim/composition.hpp"
#include "convexdim/search.hpp"

using namespace convexdim;

static void BM_ClosedSetEnumeration(benchmark::State& state) {
    const PointSet p = random_point_set(static_cast<int>(state.range(0)), 42);
    for (auto _ : state) benchmark::DoNotOptimize(from_planar(p));
}
BENCHMARK(BM_ClosedSetEnumeration)->Arg(8)->Arg(12)->Arg(16);

static void BM_PlanarCopoints(benchmark::State& state) {
    const PointSet p = random_point_set(static_cast<int>(state.range(0)), 42);
    for (auto _ : state) benchmark::DoNotOptimize(planar_copoints(p));
}
BENCHMARK(BM_PlanarCopoints)->Arg(8)->Arg(16);

static void BM_CriticalPairsAndCycles(benchmark::State& state) {
    const ConvexGeometry g = from_planar(random_point_set(static_cast<int>(state.range(0)), 7));
    const Lattice l = Lattice::of(g);
    for (auto _ : state) {
        const auto pairs = critical_pairs(g, l);
        benchmark::DoNotOptimize(minimal_cycles(critical_digraph(l, pairs)));
    }
}
BENCHMARK(BM_CriticalPairsAndCycles)->Arg(8)->Arg(12);

static void BM_AnalyzeXes(benchmark::State& state) {
    const PointSet p = xes(static_cast<int>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(analyze(p));
}
BENCHMARK(BM_AnalyzeXes)->Arg(3)->Arg(4)->Unit(benchmark::kMillisecond);

static void BM_AnalyzeRandom(benchmark::State& state) {
    const PointSet p = random_point_set(static_cast<int>(state.range(0)), 3);
    for (auto _ : state) benchmark::DoNotOptimize(analyze(p));
}
BENCHMARK(BM_AnalyzeRandom)->Arg(9)->Arg(12)->Unit(benchmark::kMillisecond);
BENCHMARK_MAIN();
