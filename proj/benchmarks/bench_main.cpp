#include <benchmark/benchmark.h>

#include "solv3/controllability.hpp"
#include "solv3/simulate.hpp"

namespace {

solv3::LinearSystem sample_system() {
    const auto cls = solv3::GroupClass::r3_lambda(0.5);
    solv3::Mat2 ds;
    ds << 1.0, 0.0, 0.0, 0.5;
    const auto d = solv3::make_derivation(cls, ds, solv3::Vec2(1.0, 1.0));
    return solv3::make_system(d, {{1.0, 0.0, 0.0}});
}

void bm_kernels(benchmark::State& state) {
    const auto cls = solv3::GroupClass::r3_prime(0.3);
    double s = 0.0;
    for (auto _ : state) {
        s += 1e-6;
        benchmark::DoNotOptimize(solv3::kernels(cls, s));
    }
}
BENCHMARK(bm_kernels);

void bm_group_mul(benchmark::State& state) {
    const auto cls = solv3::GroupClass::e_n(2);
    solv3::GroupElement g(0.3, 0.1, -0.2), h(1.7, -0.4, 0.9);
    for (auto _ : state) {
        g = solv3::group_mul(cls, g, h);
        benchmark::DoNotOptimize(g);
    }
}
BENCHMARK(bm_group_mul);

void bm_integrate(benchmark::State& state) {
    const auto sys = sample_system();
    const solv3::ControlSignal signal{{1.0, {1.0}}};
    for (auto _ : state) {
        benchmark::DoNotOptimize(solv3::integrate(sys, solv3::identity_element(), signal, 1e-3));
    }
    state.SetItemsProcessed(state.iterations() * 1000);
}
BENCHMARK(bm_integrate);

void bm_decide(benchmark::State& state) {
    const auto sys = sample_system();
    for (auto _ : state) {
        benchmark::DoNotOptimize(solv3::decide(sys));
    }
}
BENCHMARK(bm_decide);

}  // namespace

BENCHMARK_MAIN();
