#include <benchmark/benchmark.h>

#include "cfhmm/analysis.hpp"

using namespace cfhmm;

namespace {

void bm_assemble(benchmark::State& state) {
    const int nx = static_cast<int>(state.range(0));
    auto [mesh, spec] = builtin_case(CaseId::tc1, std::nullopt, nx);
    for (auto _ : state) {
        benchmark::DoNotOptimize(
            assemble(mesh, spec, Scheme::CF, PecletVariant::Grid, LambdaVariant::Grid));
    }
    state.SetComplexityN(nx * nx);
}
BENCHMARK(bm_assemble)->Arg(16)->Arg(32)->Arg(64)->Arg(128)->Complexity();

void bm_solve(benchmark::State& state) {
    const int nx = static_cast<int>(state.range(0));
    auto [mesh, spec] = builtin_case(CaseId::tc1, std::nullopt, nx);
    const SparseSystem sys =
        assemble(mesh, spec, Scheme::CF, PecletVariant::Grid, LambdaVariant::Grid);
    for (auto _ : state) {
        benchmark::DoNotOptimize(solve(sys));
    }
    state.SetComplexityN(nx * nx);
}
BENCHMARK(bm_solve)->Arg(16)->Arg(32)->Arg(64)->Arg(128)->Complexity();

void bm_hmm_local_matrix(benchmark::State& state) {
    const CartesianMesh mesh = build_mesh(8, 8, Rect{});
    Eigen::Matrix2d lam;
    lam << 1.5, 0.4, 0.4, 0.9;
    for (auto _ : state) {
        for (int k = 0; k < mesh.n_cells(); ++k)
            benchmark::DoNotOptimize(local_diffusion_matrix(mesh, k, lam));
    }
}
BENCHMARK(bm_hmm_local_matrix);

}  // namespace

BENCHMARK_MAIN();
