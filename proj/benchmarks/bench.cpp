#include <benchmark/benchmark.h>

#include "polycol/colouring.hpp"
#include "polycol/flatclass.hpp"
#include "polycol/mutation.hpp"
#include "polycol/oracle.hpp"

using namespace polycol;

namespace {

void BM_EnumerateBox3(benchmark::State& state) {
    int s = static_cast<int>(state.range(0));
    for (auto _ : state) {
        auto res = enumerate_proper_colourings(build_box(3), s);
        benchmark::DoNotOptimize(res.classes.size());
    }
}
BENCHMARK(BM_EnumerateBox3)->Arg(3)->Arg(4)->Arg(5);

void BM_EnumerateP4(benchmark::State& state) {
    int s = static_cast<int>(state.range(0));
    for (auto _ : state) {
        auto res = enumerate_proper_colourings(build_p4(), s);
        benchmark::DoNotOptimize(res.classes.size());
    }
}
BENCHMARK(BM_EnumerateP4)->Arg(3)->Unit(benchmark::kMillisecond);

void BM_DevelopingGraphCensus(benchmark::State& state) {
    Colouring c = symmetric_colouring();
    for (auto _ : state) {
        DevelopingGraph g(c);
        std::uint64_t total = 0;
        for (int f = 0; f < 10; ++f)
            total += hypersurface_components(g, f).count;
        for (int w = 0; w < 5; ++w) total += cusp_components(g, w).count;
        benchmark::DoNotOptimize(total);
    }
}
BENCHMARK(BM_DevelopingGraphCensus);

void BM_BoxWalk(benchmark::State& state) {
    Colouring fig = induced_vertex_figure_colouring(symmetric_colouring(), 0).cube;
    for (auto _ : state) {
        FlatManifoldData flat = box_walk_deck_group(fig);
        benchmark::DoNotOptimize(flat.volume);
    }
}
BENCHMARK(BM_BoxWalk);

void BM_MutationTrace(benchmark::State& state) {
    Colouring c = symmetric_colouring();
    MutationSpec spec = scenario_x();
    for (auto _ : state) {
        MutantReport report = mutant_report(c, spec);
        benchmark::DoNotOptimize(report.cusps.size());
    }
}
BENCHMARK(BM_MutationTrace);

}  // namespace

BENCHMARK_MAIN();
