#include <benchmark/benchmark.h>

#include "barosplit/scenario.hpp"
#include "barosplit/studies.hpp"

using namespace barosplit;

namespace {

const Scenario& channel() {
    static const Scenario sc = build_channel_scenario(1, 4);
    return sc;
}

void BM_SsprkSeStep(benchmark::State& state) {
    const Scenario& sc = channel();
    const Scheme scheme = state.range(0) == 2 ? Scheme::Ssprk2Se : Scheme::Ssprk3Se;
    const int M = static_cast<int>(state.range(1));
    SchemeConfig cfg{scheme, 16.0, M, false, true};
    ModelState st = sc.initial;
    for (auto _ : state) {
        st = advance(st, sc.H, sc.grid, sc.params, cfg);
        benchmark::DoNotOptimize(st.zeta.data().data());
    }
}
BENCHMARK(BM_SsprkSeStep)
    ->Args({2, 1})
    ->Args({2, 8})
    ->Args({3, 1})
    ->Args({3, 8});

void BM_BarotropicSubstep(benchmark::State& state) {
    const Scenario& sc = channel();
    const int M = static_cast<int>(state.range(0));
    const SplitVelocities sv = split_velocity(sc.initial.stack, sc.grid);
    const BarotropicState bt{sv.ubar, sc.initial.zeta, sc.H};
    const VectorField gbar = VectorField::zeros(sc.grid);
    for (auto _ : state) {
        auto r = barotropic_ssprk2_substep(bt, gbar, sc.grid, sc.params, 16.0, M);
        benchmark::DoNotOptimize(r.zeta_final.data().data());
    }
}
BENCHMARK(BM_BarotropicSubstep)->Arg(1)->Arg(4)->Arg(16);

void BM_MomentumTendency(benchmark::State& state) {
    const Scenario& sc = channel();
    for (auto _ : state) {
        auto t = momentum_tendency(sc.initial.stack, sc.grid, sc.params);
        benchmark::DoNotOptimize(t.front().udata().data());
    }
}
BENCHMARK(BM_MomentumTendency);

void BM_VerticalMixingSolve(benchmark::State& state) {
    const Scenario& sc = channel();
    Scenario mix = sc;
    mix.params.nu_v = 1e-3;
    const SplitVelocities sv = split_velocity(mix.initial.stack, mix.grid);
    for (auto _ : state) {
        auto r = baroclinic_feuler_mixing(mix.initial.stack, sv.utilde, sv.ubar,
                                          mix.initial.zeta, mix.grid, mix.params, 16.0);
        benchmark::DoNotOptimize(r.gbar.udata().data());
    }
}
BENCHMARK(BM_VerticalMixingSolve);

} // namespace

BENCHMARK_MAIN();
