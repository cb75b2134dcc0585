// Parallel kernels against their serial reference loops.

#include "slopebound/bounds.hpp"
#include "slopebound/corpus.hpp"

#include <benchmark/benchmark.h>

using namespace slopebound;

static void BM_MonotoneSweep(benchmark::State& state)
{
    const bool serial = state.range(0) == 0;
    for (auto _ : state) {
        auto s = f_monotone_check(333, 333 + 8192, Precision{50}, serial);
        benchmark::DoNotOptimize(s.checked);
    }
    state.SetLabel(serial ? "serial" : "openmp");
}
BENCHMARK(BM_MonotoneSweep)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

static void BM_Corpus(benchmark::State& state, const char* suite, long count)
{
    const bool serial = state.range(0) == 0;
    CorpusConfig cfg;
    cfg.suite = suite;
    cfg.count = count;
    cfg.seed = 7;
    cfg.serial = serial;
    for (auto _ : state) {
        auto r = corpus_run(cfg);
        benchmark::DoNotOptimize(r.passed);
    }
    state.SetLabel(serial ? "serial" : "openmp");
}
BENCHMARK_CAPTURE(BM_Corpus, tree_length, "tree-length", 100)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_Corpus, bigirth_trivalent, "bigirth-trivalent", 50)
    ->Arg(0)
    ->Arg(1)
    ->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_Corpus, keyineq, "keyineq", 50)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
