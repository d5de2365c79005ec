#include <benchmark/benchmark.h>

#include "ringpat/generators.hpp"
#include "ringpat/solver.hpp"

using namespace ringpat;

namespace {

// Dirichlet data from a Doyle field, solved from rho = 0.
void BM_SolveDirichlet(benchmark::State& state)
{
    const int k = static_cast<int>(state.range(0));
    const auto c = make_complex(block_squares(0, 0, k, k));
    const BoundaryConditions bc = dirichlet_from_field(doyle_field(c, {0.3, 0.2}));
    for (auto _ : state) benchmark::DoNotOptimize(solve(c, bc));
    state.SetComplexityN(static_cast<std::int64_t>(c->vertex_count()));
}
BENCHMARK(BM_SolveDirichlet)->RangeMultiplier(2)->Range(8, 128)->Unit(benchmark::kMillisecond)->Complexity();

void BM_SolveNeumannDiamond(benchmark::State& state)
{
    const auto c = make_complex(diamond_squares(static_cast<int>(state.range(0))));
    BoundaryConditions bc = flat_neumann(*c);
    double offset = 0.4;
    for (const std::size_t i : c->boundary_vertices()) {
        if (c->degree(i) != 3) continue;
        bc.neumann_phi[c->vertices()[i]] += offset;
        offset = -offset;
    }
    for (auto _ : state) benchmark::DoNotOptimize(solve(c, bc));
}
BENCHMARK(BM_SolveNeumannDiamond)->Arg(6)->Arg(24)->Arg(48)->Unit(benchmark::kMillisecond);

void BM_SolveConjugateGradient(benchmark::State& state)
{
    const int k = static_cast<int>(state.range(0));
    const auto c = make_complex(block_squares(0, 0, k, k));
    const BoundaryConditions bc = dirichlet_from_field(doyle_field(c, {0.3, 0.2}));
    SolveOptions opts;
    opts.cholesky_limit = 0;
    for (auto _ : state) benchmark::DoNotOptimize(solve(c, bc, opts));
}
BENCHMARK(BM_SolveConjugateGradient)->Arg(32)->Arg(64)->Unit(benchmark::kMillisecond);

}  // namespace
