#include <benchmark/benchmark.h>

#include "spinpoly/coupling.hpp"
#include "spinpoly/sixj.hpp"
#include "spinpoly/su2.hpp"
#include "spinpoly/sweep.hpp"

using namespace spinpoly;

static void BM_Racah6j(benchmark::State& state) {
    long k = state.range(0);
    SixJLabels lbl{2 * k - 1, 2 * k - 1, 2 * k - 2, 2 * k - 1, 2 * k - 1, 2 * k - 2};
    for (auto _ : state) benchmark::DoNotOptimize(racah_6j(lbl));
}
BENCHMARK(BM_Racah6j)->Arg(10)->Arg(50)->Arg(200);

static void BM_EnumerateColorings(benchmark::State& state) {
    auto g = builtin_graph("cat6");
    std::vector<long> ell(6, state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(enumerate_colorings(g, ell));
}
BENCHMARK(BM_EnumerateColorings)->Arg(3)->Arg(9);

static void BM_InvariantKernel(benchmark::State& state) {
    std::vector<long> ell(6, state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(InvariantSpace(ell).dim());
}
BENCHMARK(BM_InvariantKernel)->Arg(2)->Arg(3);

static void BM_VerifyGraphSpectrum(benchmark::State& state) {
    std::vector<long> ell(6, state.range(0));
    SpectrumVerifier v(ell);
    auto g = builtin_graph("cat6");
    for (auto _ : state) benchmark::DoNotOptimize(v.verify_graph(g));
}
BENCHMARK(BM_VerifyGraphSpectrum)->Arg(2)->Arg(3);

static void BM_SweepRow(benchmark::State& state) {
    SweepSpec spec;
    spec.ell = {2, 2, 2, 2};
    for (auto _ : state) benchmark::DoNotOptimize(sweep_row(spec, state.range(0)));
}
BENCHMARK(BM_SweepRow)->Arg(20)->Arg(100)->Arg(200);

BENCHMARK_MAIN();
