#include "loclab/matching.hpp"
#include "loclab/montecarlo.hpp"
#include "loclab/rng.hpp"
#include "loclab/theory.hpp"

#include <benchmark/benchmark.h>

#include <vector>

using namespace loclab;

static void BM_ScaledBesselI0(benchmark::State& state)
{
    double x = double(state.range(0));
    for (auto _ : state)
        benchmark::DoNotOptimize(scaled_bessel_i0(x));
}
BENCHMARK(BM_ScaledBesselI0)->Arg(1)->Arg(10)->Arg(50)->Arg(500);

static void BM_BottleneckPointDistance(benchmark::State& state)
{
    std::size_t k = std::size_t(state.range(0));
    RngStream rng = RngStream::derive(123, 0, 0);
    std::vector<Point2D> a(k), b(k);
    for (std::size_t i = 0; i < k; ++i) {
        a[i] = {rng.next_double() * 100.0, rng.next_double() * 100.0};
        b[i] = {rng.next_double() * 100.0, rng.next_double() * 100.0};
    }
    for (auto _ : state)
        benchmark::DoNotOptimize(bottleneck_point_distance(a, b));
}
BENCHMARK(BM_BottleneckPointDistance)->Arg(4)->Arg(16)->Arg(64);

static void BM_RunTrial(benchmark::State& state)
{
    auto cases = {MeasurementCase::Count, MeasurementCase::RangeVector,
                  MeasurementCase::RelativeLocationSet,
                  MeasurementCase::RangeSet};
    auto c = *(cases.begin() + state.range(0));
    auto p = ScenarioParams::from_mean(4.0, 50.0, 2.5, c);
    std::uint64_t trial = 0;
    for (auto _ : state)
        benchmark::DoNotOptimize(run_trial(p, 42, trial++));
}
BENCHMARK(BM_RunTrial)->DenseRange(0, 3);

BENCHMARK_MAIN();
