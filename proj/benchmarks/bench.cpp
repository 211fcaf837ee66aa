// Microbenchmarks for the hot paths: orthant expansion, modular guessing,
// recurrence unrolling and p-curvature reduction.

#include "walkclass/fixtures.hpp"
#include "walkclass/guess.hpp"
#include "walkclass/ore.hpp"
#include "walkclass/pcurv.hpp"
#include "walkclass/series.hpp"

#include <benchmark/benchmark.h>

using namespace walkclass;

static void BM_Expand2D(benchmark::State& state) {
    StepSet s = StepSet::from_bits("01010001");
    int N = static_cast<int>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(expand_counts(s, spec2(1, 1), N));
    state.SetComplexityN(N);
}
BENCHMARK(BM_Expand2D)->Arg(50)->Arg(100)->Arg(250)->Complexity();

static void BM_Expand3D(benchmark::State& state) {
    StepSet s = StepSet::from_bits("00000100000010010010000000");
    int N = static_cast<int>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(expand_counts(s, spec3(1, 1, 1), N));
    state.SetComplexityN(N);
}
BENCHMARK(BM_Expand3D)->Arg(30)->Arg(60)->Arg(90)->Complexity();

static void BM_GuessRec(benchmark::State& state) {
    std::vector<Int> a = expand_counts(StepSet::from_bits("01010001"), spec2(1, 1), 100).a;
    GuessConfig cfg;
    cfg.max_order = 10;
    cfg.max_degree = 20;
    for (auto _ : state) benchmark::DoNotOptimize(guess_rec(a, cfg));
}
BENCHMARK(BM_GuessRec)->Unit(benchmark::kMillisecond);

static void BM_ExtendSequence(benchmark::State& state) {
    RecOp R = kreweras_rec();
    std::vector<Int> seed = expand_counts(StepSet::from_bits("01010001"), spec2(1, 1), 10).a;
    int N = static_cast<int>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(extend_sequence(R, seed, N));
    state.SetComplexityN(N);
}
BENCHMARK(BM_ExtendSequence)->Arg(500)->Arg(1000)->Arg(2000)->Unit(benchmark::kMillisecond)->Complexity();

static void BM_PCurvature(benchmark::State& state) {
    DiffOp L = kreweras_ode();
    std::uint64_t p = static_cast<std::uint64_t>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(p_curvature(L, p));
}
BENCHMARK(BM_PCurvature)->Arg(5)->Arg(23)->Arg(97)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
