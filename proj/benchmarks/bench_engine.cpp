#include <benchmark/benchmark.h>

#include "fhjam/afh.hpp"
#include "fhjam/engine.hpp"
#include "fhjam/propagation.hpp"
#include "fhjam/report.hpp"

namespace {

void BM_RunScenario1_16k(benchmark::State& state) {
    const fhjam::Scenario s = fhjam::preset(fhjam::PresetId::Scenario1, 1.0);
    for (auto _ : state) {
        benchmark::DoNotOptimize(fhjam::run(s));
    }
    state.SetItemsProcessed(static_cast<std::int64_t>(state.iterations()) *
                            static_cast<std::int64_t>(s.duration_slots));
}
BENCHMARK(BM_RunScenario1_16k)->Unit(benchmark::kMillisecond);

void BM_RunScenario3Physical_16k(benchmark::State& state) {
    fhjam::Scenario s = fhjam::preset(fhjam::PresetId::Scenario3, 5.0);
    s.propagation = fhjam::PropagationMode::PhysicalFspl;
    for (auto _ : state) {
        benchmark::DoNotOptimize(fhjam::run(s));
    }
    state.SetItemsProcessed(static_cast<std::int64_t>(state.iterations()) *
                            static_cast<std::int64_t>(s.duration_slots));
}
BENCHMARK(BM_RunScenario3Physical_16k)->Unit(benchmark::kMillisecond);

void BM_NextHop(benchmark::State& state) {
    const fhjam::ChannelMap map(79, fhjam::AfhConfig{});
    fhjam::HopPrng prng(1);
    for (auto _ : state) {
        benchmark::DoNotOptimize(fhjam::next_hop(prng, map));
    }
}
BENCHMARK(BM_NextHop);

void BM_PathLoss(benchmark::State& state) {
    double d = 0.5;
    for (auto _ : state) {
        benchmark::DoNotOptimize(
            fhjam::path_loss_db(d, 2440.0, fhjam::PropagationMode::PaperLiteral));
        d = d < 20.0 ? d + 0.5 : 0.5;
    }
}
BENCHMARK(BM_PathLoss);

}  // namespace

BENCHMARK_MAIN();
