// Serial reference kernels against their production counterparts: the
// backtracking counter vs full assignment enumeration, and the serial cover
// sweep vs the OpenMP one.

#include <benchmark/benchmark.h>

#include "dpcolor/cover.hpp"
#include "dpcolor/dpsearch.hpp"
#include "dpcolor/graph.hpp"

using namespace dpcolor;

namespace {

FullCover twisted_wheel_cover(int m) {
    Graph w4 = make_family(Family::wheel, {4});
    FullCover h = identity_cover(w4, m);
    Perm shift = identity_perm(m);
    for (int i = 0; i < m; ++i) shift[i] = (i + 1) % m;
    h.sigma[w4.edge_index(1, 2)] = shift;
    h.sigma[w4.edge_index(2, 3)] = shift;
    return h;
}

void BM_count_backtracking(benchmark::State& state) {
    FullCover h = twisted_wheel_cover(static_cast<int>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(count_colorings(h));
}

void BM_count_reference(benchmark::State& state) {
    FullCover h = twisted_wheel_cover(static_cast<int>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(count_colorings_reference(h));
}

void BM_sweep_serial(benchmark::State& state) {
    Graph g = state.range(0) == 0 ? make_family(Family::complete, {4})
                                  : make_family(Family::wheel, {4});
    for (auto _ : state) benchmark::DoNotOptimize(dp_color_value_serial(g, 3).min_count);
}

void BM_sweep_parallel(benchmark::State& state) {
    Graph g = state.range(0) == 0 ? make_family(Family::complete, {4})
                                  : make_family(Family::wheel, {4});
    int jobs = static_cast<int>(state.range(1));
    for (auto _ : state)
        benchmark::DoNotOptimize(dp_color_value(g, 3, {kDefaultBudget, jobs}).min_count);
}

void BM_sweep_w4_m4_serial(benchmark::State& state) {
    Graph g = make_family(Family::wheel, {4});
    for (auto _ : state) benchmark::DoNotOptimize(dp_color_value_serial(g, 4).min_count);
}

void BM_sweep_w4_m4_parallel(benchmark::State& state) {
    Graph g = make_family(Family::wheel, {4});
    int jobs = static_cast<int>(state.range(0));
    for (auto _ : state)
        benchmark::DoNotOptimize(dp_color_value(g, 4, {kDefaultBudget, jobs}).min_count);
}

} // namespace

BENCHMARK(BM_count_backtracking)->Arg(3)->Arg(4);
BENCHMARK(BM_count_reference)->Arg(3)->Arg(4);
BENCHMARK(BM_sweep_serial)->Arg(0)->Arg(1);
BENCHMARK(BM_sweep_parallel)->Args({0, 2})->Args({1, 2})->Args({1, 4});
BENCHMARK(BM_sweep_w4_m4_serial)->Unit(benchmark::kMillisecond)->Iterations(1);
BENCHMARK(BM_sweep_w4_m4_parallel)->Arg(4)->Unit(benchmark::kMillisecond)->Iterations(1);

BENCHMARK_MAIN();
