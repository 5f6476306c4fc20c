#include <benchmark/benchmark.h>

#include "agcd/agcd.hpp"
#include "agcd/bezout.hpp"
#include "agcd/displacement.hpp"
#include "agcd/gko.hpp"
#include "agcd/harness.hpp"
#include "agcd/testkit.hpp"

namespace {

using namespace agcd;

Polynomial random_monic(std::uint64_t seed, std::size_t degree) {
    Rng rng(seed);
    return testkit::random_monic(rng, degree);
}

CauchyGenerators mult_matrix_cauchy(std::size_t n) {
    const Polynomial f = random_monic(2 * n, n);
    const Polynomial g = random_monic(2 * n + 1, n - 1);
    return toeplitz_to_cauchy(generators_of_mult_matrix(f, g, default_theta(n, n)));
}

void BM_GkoLu(benchmark::State& state) {
    const std::size_t n = static_cast<std::size_t>(state.range(0));
    const CauchyGenerators cg = mult_matrix_cauchy(n);
    for (auto _ : state) {
        StructuredLU lu = gko_lu(cg, Pivoting::kGu);
        benchmark::DoNotOptimize(lu.pivots.data());
    }
    state.SetComplexityN(static_cast<benchmark::IterationCount>(n));
}
BENCHMARK(BM_GkoLu)->Arg(128)->Arg(256)->Arg(512)->Complexity(benchmark::oNSquared);

void BM_DenseGeppSolve(benchmark::State& state) {
    const std::size_t n = static_cast<std::size_t>(state.range(0));
    Rng rng(7 * n);
    DenseMatrix a(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) a.at(i, j) = rng.unit_disc();
    std::vector<cx> b(n, cx(1.0));
    for (auto _ : state) {
        auto x = testkit::dense_gepp_solve(a, b);
        benchmark::DoNotOptimize(x.data());
    }
}
BENCHMARK(BM_DenseGeppSolve)->Arg(128)->Arg(256);

void BM_GeneratorsOfMultMatrix(benchmark::State& state) {
    const std::size_t n = static_cast<std::size_t>(state.range(0));
    const Polynomial f = random_monic(3 * n, n);
    const Polynomial g = random_monic(3 * n + 1, n - 1);
    const cx theta = default_theta(n, n);
    for (auto _ : state) {
        auto tg = generators_of_mult_matrix(f, g, theta);
        benchmark::DoNotOptimize(tg.g.entries().data());
    }
}
BENCHMARK(BM_GeneratorsOfMultMatrix)->Arg(128)->Arg(512);

void BM_MultMatrixColumn(benchmark::State& state) {
    const std::size_t n = static_cast<std::size_t>(state.range(0));
    const Polynomial f = random_monic(5 * n, n);
    const Polynomial g = random_monic(5 * n + 1, n - 1);
    for (auto _ : state) {
        auto col = mult_matrix_column(f, g, n / 2);
        benchmark::DoNotOptimize(col.data());
    }
}
BENCHMARK(BM_MultMatrixColumn)->Arg(64)->Arg(256);

void BM_ToeplitzToCauchy(benchmark::State& state) {
    const std::size_t n = static_cast<std::size_t>(state.range(0));
    const Polynomial f = random_monic(11 * n, n);
    const Polynomial g = random_monic(11 * n + 1, n - 1);
    const ToeplitzGenerators tg = generators_of_mult_matrix(f, g, default_theta(n, n));
    for (auto _ : state) {
        auto cg = toeplitz_to_cauchy(tg);
        benchmark::DoNotOptimize(cg.g.entries().data());
    }
}
BENCHMARK(BM_ToeplitzToCauchy)->Arg(256)->Arg(1024);

void BM_Pipeline(benchmark::State& state) {
    const std::size_t n = static_cast<std::size_t>(state.range(0));
    const std::size_t k = n / 3;
    const auto inst = testkit::plant_instance(n, n - 1, k, 1e-5, 17);
    AgcdConfig cfg;
    cfg.rank_tol_absolute = auto_rank_tol(1e-5);
    for (auto _ : state) {
        AgcdResult res = approximate_gcd(inst.f, inst.g_observed, cfg);
        benchmark::DoNotOptimize(&res.residual);
    }
}
BENCHMARK(BM_Pipeline)->Arg(8)->Arg(22)->Arg(36);

}  // namespace

int main(int argc, char** argv) {
    benchmark::Initialize(&argc, argv);
    if (benchmark::ReportUnrecognizedArguments(argc, argv)) return 1;
    benchmark::RunSpecifiedBenchmarks();
    benchmark::Shutdown();
    return 0;
}
