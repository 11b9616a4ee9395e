#include <benchmark/benchmark.h>

#include <cmath>

#include "casidual/blackbody.hpp"
#include "casidual/casimir.hpp"
#include "casidual/duality.hpp"
#include "casidual/numerics.hpp"

using namespace casidual;

namespace {

void BM_BoseIntegral(benchmark::State& state) {
    for (auto _ : state)
        benchmark::DoNotOptimize(numerics::bose_integral(4.0, 2.0));
}
BENCHMARK(BM_BoseIntegral);

void BM_LogBoseIntegral(benchmark::State& state) {
    for (auto _ : state)
        benchmark::DoNotOptimize(numerics::log_bose_integral(2.0));
}
BENCHMARK(BM_LogBoseIntegral);

void BM_AbelPlanaZeta2(benchmark::State& state) {
    for (auto _ : state) {
        auto r = numerics::abel_plana(
            [](double x) { return 1.0 / ((1.0 + x) * (1.0 + x)); },
            [](double x) {
                const double d = 1.0 + x * x;
                return 4.0 * x / (d * d);
            });
        benchmark::DoNotOptimize(r.total);
    }
}
BENCHMARK(BM_AbelPlanaZeta2);

void BM_DeltaILogRoute(benchmark::State& state) {
    for (auto _ : state)
        benchmark::DoNotOptimize(casimir::delta_I_log_route(1.0, 1.0));
}
BENCHMARK(BM_DeltaILogRoute);

void BM_DeltaIBranchRoute(benchmark::State& state) {
    for (auto _ : state)
        benchmark::DoNotOptimize(casimir::delta_I_abel_plana(1.0, 1.0));
}
BENCHMARK(BM_DeltaIBranchRoute);

void BM_PressureViaDerivative(benchmark::State& state) {
    for (auto _ : state)
        benchmark::DoNotOptimize(casimir::pressure_via_derivative(1.0));
}
BENCHMARK(BM_PressureViaDerivative);

void BM_RegulatedFinitePart(benchmark::State& state) {
    for (auto _ : state) {
        auto r = casimir::regulated_finite_part(1.0);
        benchmark::DoNotOptimize(r.extrapolated);
    }
}
BENCHMARK(BM_RegulatedFinitePart);

void BM_DualityFullReport(benchmark::State& state) {
    for (auto _ : state) {
        auto r = duality::full_report(1.0);
        benchmark::DoNotOptimize(r.inconsistency_ratio);
    }
}
BENCHMARK(BM_DualityFullReport);

}  // namespace

BENCHMARK_MAIN();
