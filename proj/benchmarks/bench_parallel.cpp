#include <benchmark/benchmark.h>

#include <cmath>
#include <vector>

#include "pfj/kernels.hpp"
#include "pfj/oracle.hpp"

namespace {

// Synthetic instance sized for timing: Chebyshev-style rows keep the
// tables dense and realistic, the inverse-transpose factor is irrelevant
// to assembly cost so the identity stands in for it.
pfj::EnsembleSpec synthetic_spec(int m, int n) {
    pfj::EnsembleSpec spec;
    spec.space.points.resize(m);
    spec.space.weights.assign(m, 1.0);
    for (int i = 0; i < m; ++i) {
        spec.space.points[i] = -1.0 + 2.0 * i / (m - 1);
    }
    spec.n = n;
    spec.phi.resize(2 * n, m);
    for (int j = 0; j < 2 * n; ++j) {
        for (int x = 0; x < m; ++x) {
            spec.phi(j, x) =
                std::cos(j * std::acos(spec.space.points[x] * 0.999));
        }
    }
    pfj::Matrix eps = pfj::Matrix::Zero(m, m);
    for (int x = 0; x < m; ++x) {
        for (int y = x + 1; y < m; ++y) {
            eps(x, y) = 0.5;
            eps(y, x) = -0.5;
        }
    }
    spec.epsilon = pfj::SkewMatrix(std::move(eps));
    return spec;
}

pfj::MomentSet synthetic_moments(int n) {
    pfj::MomentSet mom;
    mom.m = pfj::SkewMatrix::zero(2 * n);
    mom.m_inv_t = pfj::Matrix::Identity(2 * n, 2 * n);
    mom.z = pfj::Complex(1.0, 0.0);
    return mom;
}

void bench_kernel_parallel(benchmark::State& state) {
    const auto spec = synthetic_spec(static_cast<int>(state.range(0)), 16);
    const auto mom = synthetic_moments(16);
    for (auto _ : state) {
        benchmark::DoNotOptimize(pfj::correlation_kernel(spec, mom));
    }
}

void bench_kernel_serial(benchmark::State& state) {
    const auto spec = synthetic_spec(static_cast<int>(state.range(0)), 16);
    const auto mom = synthetic_moments(16);
    for (auto _ : state) {
        benchmark::DoNotOptimize(pfj::correlation_kernel_serial(spec, mom));
    }
}

pfj::Complex bench_term(const std::vector<int>& tuple) {
    double re = 1.0, im = 0.0;
    for (size_t i = 0; i < tuple.size(); ++i) {
        re += 0.1 * tuple[i] * (i + 1);
        im -= 0.05 * tuple[i];
    }
    return {re, im};
}

void bench_enumeration_parallel(benchmark::State& state) {
    const pfj::oracle::EnumerationBudget budget;
    for (auto _ : state) {
        benchmark::DoNotOptimize(
            pfj::oracle::sum_over_tuples(12, 6, budget, bench_term));
    }
}

void bench_enumeration_serial(benchmark::State& state) {
    const pfj::oracle::EnumerationBudget budget;
    for (auto _ : state) {
        benchmark::DoNotOptimize(
            pfj::oracle::sum_over_tuples_serial(12, 6, budget, bench_term));
    }
}

}  // namespace

BENCHMARK(bench_kernel_parallel)->Arg(128)->Arg(256)->Unit(benchmark::kMillisecond);
BENCHMARK(bench_kernel_serial)->Arg(128)->Arg(256)->Unit(benchmark::kMillisecond);
BENCHMARK(bench_enumeration_parallel)->Unit(benchmark::kMillisecond);
BENCHMARK(bench_enumeration_serial)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
