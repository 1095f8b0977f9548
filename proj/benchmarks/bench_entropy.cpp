#include <benchmark/benchmark.h>

#include "topent/kneading.hpp"
#include "topent/lap_entropy.hpp"
#include "topent/oracles.hpp"

using namespace topent;

static void BM_LapEntropyQuartic(benchmark::State& state) {
    const ModalMap map = ModalMap::quartic({3.7, 3.1});
    const double epsilon = 1.0 / state.range(0);
    for (auto _ : state)
        benchmark::DoNotOptimize(lap_entropy(map, epsilon, 20000));
}
BENCHMARK(BM_LapEntropyQuartic)->Arg(1000)->Arg(100000)->Arg(1000000);

static void BM_KneadingQuartic(benchmark::State& state) {
    const QuarticParams p{3.7, 3.1};
    for (auto _ : state)
        benchmark::DoNotOptimize(radulescu_entropy(p));
}
BENCHMARK(BM_KneadingQuartic);

static void BM_LapEntropyTent(benchmark::State& state) {
    const ModalMap map = ModalMap::tent(1.3);
    for (auto _ : state)
        benchmark::DoNotOptimize(lap_entropy(map, 1e-5, 5000));
}
BENCHMARK(BM_LapEntropyTent);

static void BM_BruteForceLaps(benchmark::State& state) {
    const ModalMap map = ModalMap::cubic({4.0, 0.0, -1});
    const int n = static_cast<int>(state.range(0));
    for (auto _ : state)
        benchmark::DoNotOptimize(brute_force_laps(map, n));
}
BENCHMARK(BM_BruteForceLaps)->Arg(6)->Arg(9);

BENCHMARK_MAIN();
