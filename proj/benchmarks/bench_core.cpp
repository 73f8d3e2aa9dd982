#include "fracbvp/basis.hpp"
#include "fracbvp/builtin.hpp"
#include "fracbvp/frac_series.hpp"
#include "fracbvp/gamma.hpp"
#include "fracbvp/metrics.hpp"
#include "fracbvp/quadrature.hpp"
#include "fracbvp/wrm.hpp"

#include <benchmark/benchmark.h>

namespace {

using namespace fracbvp;

void BM_Gamma(benchmark::State& state)
{
    double z = 0.31;
    for (auto _ : state) {
        benchmark::DoNotOptimize(gamma_fn(z));
        z += 1e-9;
    }
}
BENCHMARK(BM_Gamma);

void BM_CaputoSeries(benchmark::State& state)
{
    const FracSeries s = modified_legendre(5).to_series();
    const FracOrder order(1.5);
    for (auto _ : state)
        benchmark::DoNotOptimize(caputo_series(s, order));
}
BENCHMARK(BM_CaputoSeries);

void BM_CaputoOracle(benchmark::State& state)
{
    const FracSeries s = modified_legendre(3).to_series();
    const FracOrder order(1.5);
    for (auto _ : state)
        benchmark::DoNotOptimize(caputo_numeric_oracle(s, order, 0.5));
}
BENCHMARK(BM_CaputoOracle);

void BM_GaussRule(benchmark::State& state)
{
    const int n = static_cast<int>(state.range(0));
    for (auto _ : state)
        benchmark::DoNotOptimize(gauss_legendre_rule(n));
}
BENCHMARK(BM_GaussRule)->Arg(16)->Arg(64);

void BM_Integrate(benchmark::State& state)
{
    const CompositeRule rule = make_composite(0.0, 1.0);
    const auto f = [](double x) { return x * x * x - 0.25 * x; };
    for (auto _ : state)
        benchmark::DoNotOptimize(integrate(f, rule));
}
BENCHMARK(BM_Integrate);

void BM_AssembleGalerkin(benchmark::State& state)
{
    const ProblemSpec spec = builtin_problem(1);
    const TrialSpace trial =
        build_trial_space(BasisFamily::ModifiedLegendre, 3, spec.bcs, spec.a, spec.b);
    const ResidualSystem sys(Method::Galerkin, trial, spec);
    const CompositeRule quad = make_composite(spec.a, spec.b);
    const std::vector<double> coeffs{0.4, -0.01, 0.002};
    std::vector<double> f;
    Matrix j;
    for (auto _ : state) {
        sys.assemble(coeffs, quad, f, j);
        benchmark::DoNotOptimize(f.data());
    }
}
BENCHMARK(BM_AssembleGalerkin);

void BM_SolveProblem1(benchmark::State& state)
{
    const ProblemSpec spec = builtin_problem(1);
    for (auto _ : state)
        benchmark::DoNotOptimize(
            solve(spec, Method::Galerkin, BasisFamily::ModifiedLegendre, 3));
}
BENCHMARK(BM_SolveProblem1);

} // namespace

BENCHMARK_MAIN();
