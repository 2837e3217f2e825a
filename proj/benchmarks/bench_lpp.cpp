#include <benchmark/benchmark.h>

#include <polymer/lpp.hpp>

namespace {

void BM_LppSimulate(benchmark::State& state) {
    polymer::LppConfig cfg;
    cfg.n_steps = static_cast<int>(state.range(0));
    cfg.q = state.range(1) ? 0.5 : 0.3;
    cfg.samples = 200;
    for (auto _ : state) benchmark::DoNotOptimize(polymer::simulate(cfg));
    state.SetItemsProcessed(state.iterations() * cfg.samples * cfg.n_steps * (cfg.n_steps + 1) / 2);
}
BENCHMARK(BM_LppSimulate)->Args({100, 1})->Args({400, 1})->Args({400, 0})->Unit(benchmark::kMillisecond);

}  // namespace
