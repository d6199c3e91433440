#include <benchmark/benchmark.h>

#include "stochdom/bootstrap.hpp"
#include "stochdom/mixture.hpp"
#include "stochdom/samples.hpp"

namespace {

void bm_bootstrap_band(benchmark::State& state) {
    const auto n = static_cast<std::size_t>(state.range(0));
    const auto resamples = static_cast<std::size_t>(state.range(1));
    const stochdom::SampleSet a = stochdom::make_sample_set(
        stochdom::sample(stochdom::make_gaussian(0.0, 1.0), n, 1));
    const stochdom::SampleSet b = stochdom::make_sample_set(
        stochdom::sample(stochdom::make_gaussian(0.5, 1.0), n, 2));
    for (auto _ : state)
        benchmark::DoNotOptimize(stochdom::bootstrap_band(a, b, 0.05, resamples, 42));
}

}  // namespace

BENCHMARK(bm_bootstrap_band)
    ->Args({100, 200})
    ->Args({400, 200})
    ->Args({400, 1000})
    ->Args({2000, 1000})
    ->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
