#include <benchmark/benchmark.h>

#include "stochdom/measures.hpp"
#include "stochdom/mixture.hpp"

namespace {

// Near-coincident bimodal pair: the hardest public fixture for the
// sign-region machinery (narrow components, one genuine crossing).
stochdom::MixtureModel side_a() { return stochdom::make_gaussian(0.211325, 0.002); }

stochdom::MixtureModel side_b() {
    return stochdom::make_mixture({{0.925, stochdom::make_gaussian(0.21875, 0.002)},
                                   {0.075, stochdom::make_gaussian(0.04875, 0.002)}});
}

void bm_c_p_analytic(benchmark::State& state) {
    const stochdom::MixtureModel a = side_a();
    const stochdom::MixtureModel b = side_b();
    for (auto _ : state)
        benchmark::DoNotOptimize(stochdom::c_p_analytic(a, b, 1e-8));
}

void bm_c_d_analytic(benchmark::State& state) {
    const stochdom::MixtureModel a = side_a();
    const stochdom::MixtureModel b = side_b();
    for (auto _ : state)
        benchmark::DoNotOptimize(stochdom::c_d_analytic(a, b, 1e-8));
}

void bm_reference_measures(benchmark::State& state) {
    const stochdom::MixtureModel a = side_a();
    const stochdom::MixtureModel b = side_b();
    for (auto _ : state)
        for (const std::string& id : stochdom::reference_measure_ids())
            benchmark::DoNotOptimize(stochdom::reference_measure(id, a, b, 1e-8));
}

}  // namespace

BENCHMARK(bm_c_p_analytic)->Unit(benchmark::kMillisecond);
BENCHMARK(bm_c_d_analytic)->Unit(benchmark::kMillisecond);
BENCHMARK(bm_reference_measures)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
