#include <benchmark/benchmark.h>

#include <hirzebruch/fibrations.hpp>
#include <hirzebruch/genseries.hpp>
#include <hirzebruch/verify.hpp>

using namespace hirzebruch;

static void BM_Mul(benchmark::State &state)
{
    const int w = static_cast<int>(state.range(0));
    const WSeries a = verify::random_h_series(1, w, 4, 60);
    const WSeries b = verify::random_h_series(2, w, 4, 60);
    for (auto _ : state) {
        benchmark::DoNotOptimize(a * b);
    }
}
BENCHMARK(BM_Mul)->Arg(4)->Arg(6)->Arg(9);

static void BM_Exp(benchmark::State &state)
{
    const int w = static_cast<int>(state.range(0));
    WSeries a = verify::random_h_series(3, w, 3, 40);
    a = a - WSeries::y_polynomial(a.weight_zero_part(), w, 3);
    for (auto _ : state) {
        benchmark::DoNotOptimize(exp(a));
    }
}
BENCHMARK(BM_Exp)->Arg(4)->Arg(6);

static void BM_BuildD(benchmark::State &state)
{
    const FibrationSpec spec = catalog_spec(static_cast<Family>(state.range(0)));
    for (auto _ : state) {
        benchmark::DoNotOptimize(build_D(spec, 9, 7));
    }
}
BENCHMARK(BM_BuildD)->DenseRange(0, 3)->Unit(benchmark::kMillisecond);

static void BM_DerivedQ(benchmark::State &state)
{
    const FibrationSpec spec = catalog_spec(static_cast<Family>(state.range(0)));
    for (auto _ : state) {
        benchmark::DoNotOptimize(derived_Q(spec, 6, 7));
    }
}
BENCHMARK(BM_DerivedQ)->DenseRange(0, 3)->Unit(benchmark::kMillisecond);

static void BM_ChiSeries(benchmark::State &state)
{
    const FibrationSpec spec = catalog_spec(Family::E6);
    const int t = static_cast<int>(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(chi_series(spec, t, t + 1));
    }
}
BENCHMARK(BM_ChiSeries)->DenseRange(2, 6, 2)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
