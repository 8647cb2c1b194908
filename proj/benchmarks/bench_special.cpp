#include <benchmark/benchmark.h>

#include "altinv/builtins.hpp"
#include "altinv/convolution.hpp"
#include "altinv/euler.hpp"
#include "altinv/gamma_tilde.hpp"
#include "altinv/invariance.hpp"
#include "altinv/zeta.hpp"

using namespace altinv;

static void ZetaSeries(benchmark::State& state) {
    for (auto _ : state) {
        auto v = zeta::zeta_e(Complex(2.0), Complex(0.3), 1e-12);
        benchmark::DoNotOptimize(v);
    }
}
BENCHMARK(ZetaSeries);

static void ZetaFourier(benchmark::State& state) {
    for (auto _ : state) {
        auto v = zeta::zeta_e_ex({Complex(-1.5), Complex(0.3), zeta::Regime::fourier, 1e-12});
        benchmark::DoNotOptimize(v);
    }
}
BENCHMARK(ZetaFourier);

static void EulerPolyBuild(benchmark::State& state) {
    for (auto _ : state) {
        auto r = euler::euler_distribution_residual(8, Rational(3, 7), 5);
        benchmark::DoNotOptimize(r);
    }
}
BENCHMARK(EulerPolyBuild);

static void LogGammaTilde(benchmark::State& state) {
    double tol = std::pow(10.0, -static_cast<double>(state.range(0)));
    for (auto _ : state) {
        auto v = gammat::log_gamma_tilde(1.7, tol);
        benchmark::DoNotOptimize(v);
    }
}
BENCHMARK(LogGammaTilde)->Arg(6)->Arg(8)->Arg(10);

static void ConvolveEuler(benchmark::State& state) {
    quad::QuadratureConfig cfg;
    for (auto _ : state) {
        auto r = conv::euler_convolution_numeric_residual(2, 2, 0.4, 1.0, cfg);
        benchmark::DoNotOptimize(r);
    }
}
BENCHMARK(ConvolveEuler);

static void InvarianceRegistryMember(benchmark::State& state) {
    auto f = builtins::make_builtin("expfrac:a=2");
    auto xs = default_grid_xs();
    auto ys = default_grid_ys();
    auto ns = default_grid_ns();
    for (auto _ : state) {
        auto rep = check_invariance(f, xs, ys, ns, 1e-12);
        benchmark::DoNotOptimize(rep);
    }
}
BENCHMARK(InvarianceRegistryMember);

BENCHMARK_MAIN();
