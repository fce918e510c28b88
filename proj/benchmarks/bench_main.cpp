#include "gk/dmodule.hpp"
#include "gk/geometry.hpp"
#include "gk/hypergeometric.hpp"
#include "gk/toric.hpp"

#include <benchmark/benchmark.h>

using namespace gk;

static void BM_HlInvert(benchmark::State& state)
{
    const BundleSpace b = builtin_geometry("P2_O_O1").bundle();
    const AlgElement x = b.z() - b.c1(1);
    const HLaurent den = pow(HLaurent::shifted(x, 1), static_cast<int>(state.range(0)));
    for (auto _ : state)
        benchmark::DoNotOptimize(hl_invert(den));
}
BENCHMARK(BM_HlInvert)->Arg(1)->Arg(4)->Arg(8);

static void BM_ISeriesF1(benchmark::State& state)
{
    const BundleSpace b = builtin_geometry("F1").bundle();
    const int k = static_cast<int>(state.range(0));
    for (auto _ : state)
        benchmark::DoNotOptimize(i_series(b, Box{k, {k}}));
}
BENCHMARK(BM_ISeriesF1)->Arg(2)->Arg(4)->Arg(6);

static void BM_EquivariantI(benchmark::State& state)
{
    const int n = static_cast<int>(state.range(0));
    for (auto _ : state)
        benchmark::DoNotOptimize(check_annihilation(n, 5));
}
BENCHMARK(BM_EquivariantI)->Arg(1)->Arg(2)->Arg(3)->Unit(benchmark::kMillisecond);

static void BM_SRCohomology(benchmark::State& state)
{
    const LiftedFan lf = builtin_geometry("P1xP1_O_O11").lifted_fan();
    for (auto _ : state)
        benchmark::DoNotOptimize(sr_cohomology(lf.fan));
}
BENCHMARK(BM_SRCohomology);

BENCHMARK_MAIN();
