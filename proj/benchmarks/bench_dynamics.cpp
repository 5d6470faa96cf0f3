#include <benchmark/benchmark.h>

#include "chaoskit/bifurcation.hpp"
#include "chaoskit/diagnostics.hpp"
#include "chaoskit/map_core.hpp"

using namespace chaoskit;

static void BM_Orbit(benchmark::State& st) {
    const auto params = MapParams::from_r(3.9);
    const auto length = static_cast<std::size_t>(st.range(0));
    for (auto _ : st) benchmark::DoNotOptimize(orbit(params, kDefaultX0, 0, length));
    st.SetItemsProcessed(st.iterations() * st.range(0));
}
BENCHMARK(BM_Orbit)->Arg(1 << 10)->Arg(1 << 16);

static void BM_DetectCycle(benchmark::State& st) {
    const auto params = MapParams::from_r(st.range(0) / 1000.0);
    for (auto _ : st) benchmark::DoNotOptimize(detect_cycle(params));
}
BENCHMARK(BM_DetectCycle)->Arg(3200)->Arg(3560)->Arg(3900)->Unit(benchmark::kMillisecond);

static void BM_Lyapunov(benchmark::State& st) {
    const auto params = MapParams::from_r(4.0);
    for (auto _ : st) benchmark::DoNotOptimize(lyapunov(params, kDefaultX0, 0, 100'000));
    st.SetItemsProcessed(st.iterations() * 100'000);
}
BENCHMARK(BM_Lyapunov)->Unit(benchmark::kMillisecond);

static void BM_Sweep(benchmark::State& st) {
    for (auto _ : st) benchmark::DoNotOptimize(sweep(2.5, 4.0, 200, 10'000, 100));
}
BENCHMARK(BM_Sweep)->Unit(benchmark::kMillisecond);

static void BM_LocateDoubling(benchmark::State& st) {
    const int index = static_cast<int>(st.range(0));
    for (auto _ : st) benchmark::DoNotOptimize(locate_doubling(index, 1e-4));
}
BENCHMARK(BM_LocateDoubling)->DenseRange(1, 3)->Unit(benchmark::kMillisecond);

static void BM_LiYorkeThreshold(benchmark::State& st) {
    for (auto _ : st) benchmark::DoNotOptimize(liyorke_threshold(3.5, 4.0, 1e-9));
}
BENCHMARK(BM_LiYorkeThreshold);

BENCHMARK_MAIN();
