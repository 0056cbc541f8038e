#include <benchmark/benchmark.h>

#include "thinscat/specfun.hpp"

using namespace thinscat;

static void BM_Hankel0(benchmark::State& state)
{
    double const x = double(state.range(0)) / 100.0;
    for (auto _ : state)
    {
        benchmark::DoNotOptimize(specfun::hankel1(0, x));
    }
}
BENCHMARK(BM_Hankel0)->Arg(1)->Arg(100)->Arg(10000);

static void BM_BesselOrderSweep(benchmark::State& state)
{
    int const n = int(state.range(0));
    for (auto _ : state)
    {
        for (int k = 0; k <= n; ++k)
        {
            benchmark::DoNotOptimize(specfun::bessel_j(k, 3.7));
            benchmark::DoNotOptimize(specfun::bessel_y(k, 3.7));
        }
    }
}
BENCHMARK(BM_BesselOrderSweep)->Arg(10)->Arg(40);
