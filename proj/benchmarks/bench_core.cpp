#include <benchmark/benchmark.h>

#include "dcq/coefficients.hpp"
#include "dcq/driver.hpp"
#include "dcq/exponent.hpp"
#include "dcq/mgf.hpp"
#include "dcq/recurrence.hpp"

namespace {

dcq::RecurrenceSpec half_third_spec() {
    return dcq::RecurrenceSpec::validate(
        {{1.0, dcq::Ratio::of(1, 2)}, {1.0, dcq::Ratio::of(1, 3)}});
}

void BM_EvaluateDenseConstant(benchmark::State& state) {
    dcq::RecurrenceSpec spec = half_third_spec();
    std::int64_t horizon = state.range(0);
    dcq::Toll toll = dcq::Toll::constant(1.0);
    for (auto _ : state) {
        benchmark::DoNotOptimize(dcq::evaluate_dense(spec, toll, horizon));
    }
    state.SetItemsProcessed(state.iterations() * horizon);
}
BENCHMARK(BM_EvaluateDenseConstant)->Arg(10'000)->Arg(1'000'000)->Arg(10'000'000);

void BM_KernelColumn(benchmark::State& state) {
    dcq::RecurrenceSpec spec = half_third_spec();
    std::int64_t horizon = state.range(0);
    for (auto _ : state) {
        benchmark::DoNotOptimize(dcq::kernel_column(spec, 0, horizon));
    }
    state.SetItemsProcessed(state.iterations() * horizon);
}
BENCHMARK(BM_KernelColumn)->Arg(100'000)->Arg(1'000'000);

void BM_EvaluateSparseSingle(benchmark::State& state) {
    dcq::RecurrenceSpec spec = half_third_spec();
    std::int64_t n = state.range(0);
    dcq::Toll toll = dcq::Toll::constant(1.0);
    for (auto _ : state) {
        benchmark::DoNotOptimize(dcq::evaluate_sparse(spec, toll, n));
    }
}
BENCHMARK(BM_EvaluateSparseSingle)->Arg(1'000'000)->Arg(1'000'000'000)->Arg(1'000'000'000'000LL);

void BM_SolveExponent(benchmark::State& state) {
    dcq::RecurrenceSpec spec = half_third_spec();
    for (auto _ : state) {
        benchmark::DoNotOptimize(dcq::solve_exponent(spec));
    }
}
BENCHMARK(BM_SolveExponent);

void BM_CoefficientTable(benchmark::State& state) {
    dcq::RecurrenceSpec spec = half_third_spec();
    double s0 = dcq::solve_exponent(spec).s0;
    std::int64_t truncation = state.range(0);
    for (auto _ : state) {
        benchmark::DoNotOptimize(dcq::coefficient_table(spec, s0, truncation));
    }
    state.SetItemsProcessed(state.iterations() * (truncation + 1));
}
BENCHMARK(BM_CoefficientTable)->Arg(64)->Arg(4096);

void BM_SampleTollCauchy(benchmark::State& state) {
    dcq::DriverSpec driver(dcq::CauchyDriver{}, 42);
    std::int64_t horizon = state.range(0);
    for (auto _ : state) {
        benchmark::DoNotOptimize(dcq::sample_toll(driver, horizon, 0));
    }
    state.SetItemsProcessed(state.iterations() * horizon);
}
BENCHMARK(BM_SampleTollCauchy)->Arg(100'000)->Arg(1'000'000);

void BM_SampleTollGeometricConvolution(benchmark::State& state) {
    dcq::DriverSpec driver(dcq::GeometricConvolutionDriver{0.5}, 42);
    std::int64_t horizon = state.range(0);
    for (auto _ : state) {
        benchmark::DoNotOptimize(dcq::sample_toll(driver, horizon, 0));
    }
    state.SetItemsProcessed(state.iterations() * horizon);
}
BENCHMARK(BM_SampleTollGeometricConvolution)->Arg(10'000)->Arg(100'000);

void BM_MgfUpperBound(benchmark::State& state) {
    dcq::MgfBoundParams params;
    params.kernel_constant = 6.0;
    params.shift = 1.5;
    params.rate = 0.34;
    params.s0 = 2.098;
    params.horizon = state.range(0);
    params.t = 0.05;
    for (auto _ : state) {
        benchmark::DoNotOptimize(dcq::mgf_upper_bound_log(params));
    }
}
BENCHMARK(BM_MgfUpperBound)->Arg(10'000)->Arg(100'000);

} // namespace

BENCHMARK_MAIN();
