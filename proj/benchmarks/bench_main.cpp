#include <benchmark/benchmark.h>

#include <complex>

#include "dho/classical.hpp"
#include "dho/coherent.hpp"
#include "dho/ermakov.hpp"
#include "dho/matrices.hpp"
#include "dho/specfn.hpp"
#include "dho/spectra.hpp"
#include "dho/uncertainty.hpp"

namespace {

dho::OscillatorConfig ck_config() {
    dho::OscillatorConfig cfg;
    cfg.friction = dho::FrictionProfile::exponential_decay(1.0);
    cfg.frequency = dho::FrequencyProfile::constant(1.0);
    return cfg;
}

void BM_ClassicalIntegration(benchmark::State& state) {
    const auto cfg = ck_config();
    for (auto _ : state) {
        auto traj = dho::classical::integrate_eom(
            cfg, std::complex<double>(1.0, 0.5), std::complex<double>(0.0, 0.0),
            5.0, 1e-10, 16);
        benchmark::DoNotOptimize(traj.z.back());
    }
}
BENCHMARK(BM_ClassicalIntegration);

void BM_ErmakovNumeric(benchmark::State& state) {
    dho::OscillatorConfig cfg;
    cfg.friction = dho::FrictionProfile::exponential_decay(0.4);
    cfg.frequency = dho::FrequencyProfile::exp_half(1.1, 0.5);
    const auto ic = dho::default_initial_conditions(cfg);
    for (auto _ : state) {
        auto es = dho::solve_numeric(cfg, ic.first, ic.second, 5.0, 1e-10);
        benchmark::DoNotOptimize(es.rho(5.0));
    }
}
BENCHMARK(BM_ErmakovNumeric);

void BM_BuildRep(benchmark::State& state) {
    const auto cfg = ck_config();
    const auto es = dho::solve_caldirola_kanai(cfg);
    const int N = int(state.range(0));
    for (auto _ : state) {
        auto rep = dho::matrices::build_rep(cfg, es, 0.7, N);
        benchmark::DoNotOptimize(rep.invariant(0, 0));
    }
}
BENCHMARK(BM_BuildRep)->Arg(8)->Arg(16);

void BM_InvarianceResidual(benchmark::State& state) {
    const auto cfg = ck_config();
    const auto es = dho::solve_caldirola_kanai(cfg);
    for (auto _ : state) {
        benchmark::DoNotOptimize(
            dho::matrices::invariance_residual(cfg, es, 1.0, 1e-4, 8));
    }
}
BENCHMARK(BM_InvarianceResidual);

void BM_GramMatrix(benchmark::State& state) {
    const auto cfg = ck_config();
    const auto es = dho::solve_caldirola_kanai(cfg);
    for (auto _ : state) {
        auto g = dho::spectra::gram_matrix(cfg, es, 4, 0.5);
        benchmark::DoNotOptimize(g.max_offdiag);
    }
}
BENCHMARK(BM_GramMatrix);

void BM_SchrodingerResidual(benchmark::State& state) {
    const auto cfg = ck_config();
    const auto es = dho::solve_caldirola_kanai(cfg);
    const int grid = int(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(dho::spectra::schrodinger_residual(
            cfg, es, dho::ModeIndex{1, 0}, 0.5, grid));
    }
}
BENCHMARK(BM_SchrodingerResidual)->Arg(128)->Arg(256)->Unit(benchmark::kMillisecond);

void BM_UncertaintyQuadrature(benchmark::State& state) {
    const auto cfg = ck_config();
    const auto es = dho::solve_caldirola_kanai(cfg);
    for (auto _ : state) {
        auto rep = dho::uncertainty::quadrature(cfg, es, 1, 2, 0.6);
        benchmark::DoNotOptimize(rep.prod_x1p1);
    }
}
BENCHMARK(BM_UncertaintyQuadrature)->Unit(benchmark::kMillisecond);

void BM_BgExpand(benchmark::State& state) {
    dho::coherent::StateSpec spec;
    spec.family = dho::coherent::Family::BarutGirardello;
    spec.parameter = std::complex<double>(2.0, 1.0);
    spec.ell = 3;
    for (auto _ : state) {
        auto e = dho::coherent::bg_expand(spec);
        benchmark::DoNotOptimize(e.norm_sq);
    }
}
BENCHMARK(BM_BgExpand);

void BM_LaguerreEval(benchmark::State& state) {
    for (auto _ : state) {
        double acc = 0.0;
        for (int n = 0; n <= 32; ++n) acc += dho::specfn::laguerre(n, 2.0, 1.7);
        benchmark::DoNotOptimize(acc);
    }
}
BENCHMARK(BM_LaguerreEval);

void BM_BesselK(benchmark::State& state) {
    for (auto _ : state) {
        benchmark::DoNotOptimize(dho::specfn::bessel_k(2.0, 3.0));
    }
}
BENCHMARK(BM_BesselK);

} // namespace

int main(int argc, char** argv) {
    ::benchmark::Initialize(&argc, argv);
    if (::benchmark::ReportUnrecognizedArguments(argc, argv)) return 1;
    ::benchmark::RunSpecifiedBenchmarks();
    ::benchmark::Shutdown();
    return 0;
}
