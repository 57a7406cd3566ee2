// Serial rational lattice scan vs. the OpenMP scaled-integer kernel.

#include "pdc/audit.hpp"
#include "pdc/oracle.hpp"

#include <benchmark/benchmark.h>

namespace {

pdc::PolyhedralDC instance_of_dimension(std::size_t n) {
    auto rng = pdc::seeded_engine("bench");
    while (true) {
        auto h = pdc::random_instance(rng);
        if (h.dimension() == n) return h;
    }
}

pdc::GridSpec grid(std::size_t n, long inverse_step) {
    return pdc::GridSpec{pdc::Rational(5), pdc::Rational(1, inverse_step), n};
}

void BM_reference(benchmark::State& state) {
    const auto n = static_cast<std::size_t>(state.range(0));
    const auto h = instance_of_dimension(n);
    const auto g = grid(n, state.range(1));
    for (auto _ : state) benchmark::DoNotOptimize(pdc::reference::grid_extremum(h, g, pdc::Extremum::min));
    state.SetItemsProcessed(state.iterations() * g.total_points(pdc::default_point_budget));
}

void BM_parallel(benchmark::State& state) {
    const auto n = static_cast<std::size_t>(state.range(0));
    const auto h = instance_of_dimension(n);
    const auto g = grid(n, state.range(1));
    for (auto _ : state) benchmark::DoNotOptimize(pdc::parallel::grid_extremum(h, g, pdc::Extremum::min));
    state.SetItemsProcessed(state.iterations() * g.total_points(pdc::default_point_budget));
}

} // namespace

BENCHMARK(BM_reference)->Args({1, 4})->Args({2, 4})->Args({3, 2})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_parallel)->Args({1, 4})->Args({2, 4})->Args({3, 2})->Args({3, 4})->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
