#include <benchmark/benchmark.h>

#include <cmath>
#include <random>

#include "ringpat/energy.hpp"

using namespace ringpat;

namespace {

RhoField random_field(int k, std::uint64_t seed)
{
    const auto c = make_complex(block_squares(0, 0, k, k));
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> u(-2.0, 2.0);
    std::vector<double> v(c->vertex_count());
    for (double& x : v) x = u(rng);
    return RhoField(c, std::move(v));
}

VertexWeights weights(const ComplexPtr& c)
{
    VertexWeights w = VertexWeights::interior_default(c);
    for (const std::size_t i : c->boundary_vertices()) w.set_index(i, 1.0);
    return w;
}

void BM_Ti2(benchmark::State& state)
{
    double y = 0.01;
    for (auto _ : state) {
        benchmark::DoNotOptimize(ti2(y));
        y = y > 20.0 ? 0.01 : y * 1.07;
    }
}
BENCHMARK(BM_Ti2);

void BM_Energy(benchmark::State& state)
{
    const RhoField f = random_field(static_cast<int>(state.range(0)), 1);
    const VertexWeights w = weights(f.complex_ptr());
    for (auto _ : state) benchmark::DoNotOptimize(energy(f, w));
    state.SetComplexityN(static_cast<std::int64_t>(f.size()));
}
BENCHMARK(BM_Energy)->RangeMultiplier(2)->Range(8, 128)->Complexity();

void BM_Gradient(benchmark::State& state)
{
    const RhoField f = random_field(static_cast<int>(state.range(0)), 2);
    const VertexWeights w = weights(f.complex_ptr());
    for (auto _ : state) benchmark::DoNotOptimize(gradient(f, w));
    state.SetComplexityN(static_cast<std::int64_t>(f.size()));
}
BENCHMARK(BM_Gradient)->RangeMultiplier(2)->Range(8, 128)->Complexity();

void BM_Hessian(benchmark::State& state)
{
    const RhoField f = random_field(static_cast<int>(state.range(0)), 3);
    for (auto _ : state) benchmark::DoNotOptimize(hessian(f));
    state.SetComplexityN(static_cast<std::int64_t>(f.size()));
}
BENCHMARK(BM_Hessian)->RangeMultiplier(2)->Range(8, 128)->Complexity();

}  // namespace
