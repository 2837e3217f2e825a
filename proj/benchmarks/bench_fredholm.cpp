#include <benchmark/benchmark.h>

#include <polymer/distributions.hpp>

namespace {

void BM_FGue(benchmark::State& state) {
    polymer::NumericsConfig cfg;
    cfg.quad_n = static_cast<int>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(polymer::f_gue(-1.0, cfg));
}
BENCHMARK(BM_FGue)->Arg(40)->Arg(80)->Arg(160)->Unit(benchmark::kMillisecond);

void BM_FGoe(benchmark::State& state) {
    for (auto _ : state) benchmark::DoNotOptimize(polymer::f_goe(-1.0));
}
BENCHMARK(BM_FGoe)->Unit(benchmark::kMillisecond);

void BM_JointDensityPoint(benchmark::State& state) {
    for (auto _ : state) benchmark::DoNotOptimize(polymer::joint_density(0.5, 0.0));
}
BENCHMARK(BM_JointDensityPoint)->Unit(benchmark::kMillisecond);

void BM_JointSliceReuse(benchmark::State& state) {
    const polymer::JointSlice slice(0.0, polymer::NumericsConfig{});
    double t = 0.0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(slice.density(t));
        t += 0.01;
        if (t > 3.0) t = 0.0;
    }
}
BENCHMARK(BM_JointSliceReuse)->Unit(benchmark::kMicrosecond);

}  // namespace
