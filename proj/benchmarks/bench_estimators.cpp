#include <benchmark/benchmark.h>

#include "stochdom/estimators.hpp"
#include "stochdom/mixture.hpp"
#include "stochdom/quantile_rv.hpp"
#include "stochdom/samples.hpp"

namespace {

stochdom::SampleSet make_side(double mu, std::size_t n, std::uint64_t seed) {
    return stochdom::make_sample_set(
        stochdom::sample(stochdom::make_gaussian(mu, 1.0), n, seed));
}

void bm_estimate_c_p(benchmark::State& state) {
    const auto n = static_cast<std::size_t>(state.range(0));
    const stochdom::SampleSet a = make_side(0.0, n, 1);
    const stochdom::SampleSet b = make_side(0.5, n, 2);
    for (auto _ : state)
        benchmark::DoNotOptimize(stochdom::estimate_c_p(a, b));
    state.SetComplexityN(state.range(0));
}

void bm_estimate_c_d(benchmark::State& state) {
    const auto n = static_cast<std::size_t>(state.range(0));
    const stochdom::SampleSet a = make_side(0.0, n, 1);
    const stochdom::SampleSet b = make_side(0.5, n, 2);
    for (auto _ : state)
        benchmark::DoNotOptimize(stochdom::estimate_c_d(a, b));
    state.SetComplexityN(state.range(0));
}

void bm_build_quantile_pair(benchmark::State& state) {
    const auto n = static_cast<std::size_t>(state.range(0));
    const stochdom::SampleSet a = make_side(0.0, n, 1);
    const stochdom::SampleSet b = make_side(0.5, n, 2);
    for (auto _ : state)
        benchmark::DoNotOptimize(stochdom::build_quantile_pair(a, b));
    state.SetComplexityN(state.range(0));
}

}  // namespace

BENCHMARK(bm_estimate_c_p)->RangeMultiplier(10)->Range(100, 100000)->Complexity();
BENCHMARK(bm_estimate_c_d)->RangeMultiplier(10)->Range(100, 100000)->Complexity();
BENCHMARK(bm_build_quantile_pair)->RangeMultiplier(10)->Range(100, 100000)->Complexity();

BENCHMARK_MAIN();
