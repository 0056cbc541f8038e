#include <benchmark/benchmark.h>

#include "thinscat/multi.hpp"

using namespace thinscat;

namespace {

ScattererSet square_lattice(std::size_t side)
{
    return jittered_grid({0.0, 0.0}, {1.0, 1.0}, side, side, 1e-4, 0.5 / double(side), 11);
}

}  // namespace

static void BM_Assemble(benchmark::State& state)
{
    auto const wp = WaveParams::make(1.0, 1.0, 1.0, 1.0, 0.0);
    auto const set = square_lattice(std::size_t(state.range(0)));
    for (auto _ : state)
    {
        benchmark::DoNotOptimize(assemble_system(wp, set));
    }
    state.counters["M"] = double(set.size());
}
BENCHMARK(BM_Assemble)->Arg(10)->Arg(20)->Arg(30)->Unit(benchmark::kMillisecond);

static void BM_SolveLU(benchmark::State& state)
{
    auto const wp = WaveParams::make(1.0, 1.0, 1.0, 1.0, 0.0);
    auto const set = square_lattice(std::size_t(state.range(0)));
    for (auto _ : state)
    {
        benchmark::DoNotOptimize(solve_effective(wp, set));
    }
    state.counters["M"] = double(set.size());
}
BENCHMARK(BM_SolveLU)->Arg(10)->Arg(20)->Arg(30)->Unit(benchmark::kMillisecond);

static void BM_SolveFixedPoint(benchmark::State& state)
{
    auto const wp = WaveParams::make(1.0, 1.0, 1.0, 1.0, 0.0);
    auto const set = square_lattice(std::size_t(state.range(0)));
    SolveOptions options;
    options.method = SolveMethod::fixed_point;
    for (auto _ : state)
    {
        benchmark::DoNotOptimize(solve_effective(wp, set, options));
    }
}
BENCHMARK(BM_SolveFixedPoint)->Arg(10)->Arg(30)->Unit(benchmark::kMillisecond);
