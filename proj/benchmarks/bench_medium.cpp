#include <benchmark/benchmark.h>

#include "thinscat/medium.hpp"

using namespace thinscat;

static void BM_Nystrom(benchmark::State& state)
{
    auto const wp = WaveParams::make(1.0, 1.0, 1.0, 1.0, 0.0);
    auto const density = DensityField::constant({0.0, 1.0, 0.0, 1.0}, 1.0);
    std::size_t const n = std::size_t(state.range(0));
    for (auto _ : state)
    {
        benchmark::DoNotOptimize(nystrom_solve(wp, density, {n, n}));
    }
}
BENCHMARK(BM_Nystrom)->Arg(8)->Arg(16)->Arg(32)->Unit(benchmark::kMillisecond);

static void BM_DistributeCenters(benchmark::State& state)
{
    auto const density = DensityField::make({0.0, 1.0, 0.0, 1.0}, [](Point2 p) { return 1.0 + p.x; });
    double const a = 1.0 / double(state.range(0));
    for (auto _ : state)
    {
        benchmark::DoNotOptimize(distribute_centers(density, a, 3));
    }
}
BENCHMARK(BM_DistributeCenters)->Arg(100)->Arg(1000)->Unit(benchmark::kMillisecond);
