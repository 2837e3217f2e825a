#include <benchmark/benchmark.h>

#include <polymer/airy.hpp>
#include <polymer/kernels.hpp>
#include <polymer/quadrature.hpp>

namespace {

void BM_AiryPair(benchmark::State& state) {
    const double lo = static_cast<double>(state.range(0)), hi = lo + 10.0;
    double x = lo;
    double ai = 0.0, aip = 0.0;
    for (auto _ : state) {
        polymer::airy_pair(x, ai, aip);
        benchmark::DoNotOptimize(ai);
        benchmark::DoNotOptimize(aip);
        x += 0.0137;
        if (x > hi) x = lo;
    }
}
BENCHMARK(BM_AiryPair)->Arg(-30)->Arg(-10)->Arg(0)->Arg(10);

void BM_AiryKernel(benchmark::State& state) {
    double x = -3.0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(polymer::k_airy(x, 0.7));
        x += 0.011;
        if (x > 5.0) x = -3.0;
    }
}
BENCHMARK(BM_AiryKernel);

void BM_GaussLegendre(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(polymer::gauss_legendre(n));
}
BENCHMARK(BM_GaussLegendre)->Arg(40)->Arg(80)->Arg(320)->Arg(2000);

}  // namespace
