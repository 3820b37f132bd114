/**
 * @file bench.cpp
 * @brief Microbenchmarks for the exact kernels: row reduction over Q(q),
 *        fused R-matrix assembly, and graded dimension counting.
 */
#include <benchmark/benchmark.h>

#include <qde/graded.hpp>

using namespace qde;

static void BM_rref(benchmark::State& state) {
    int n = static_cast<int>(state.range(0));
    Mat r = r_matrix(n);
    Mat m = kron(r, Mat::identity(n)) - kron(Mat::identity(n), r);
    for (auto _ : state) {
        Sub s = Sub::from_rows(m);
        benchmark::DoNotOptimize(s.dim());
    }
}
BENCHMARK(BM_rref)->Arg(2)->Arg(3);

static void BM_fused_build(benchmark::State& state) {
    int n = static_cast<int>(state.range(0));
    for (auto _ : state) {
        QuantumLie ql(n);
        benchmark::DoNotOptimize(ql.sigma().rows());
    }
}
BENCHMARK(BM_fused_build)->Arg(2);

static void BM_graded_dim(benchmark::State& state) {
    int k = static_cast<int>(state.range(0));
    QuantumLie ql(2);
    QuadraticData qd = sym_relations(ql);
    for (auto _ : state) benchmark::DoNotOptimize(graded_dim(qd, k));
}
BENCHMARK(BM_graded_dim)->Arg(2)->Arg(3);

BENCHMARK_MAIN();
