#include <benchmark/benchmark.h>

#include "ringpat/generators.hpp"
#include "ringpat/layout.hpp"

using namespace ringpat;

namespace {

void BM_Layout(benchmark::State& state)
{
    const int k = static_cast<int>(state.range(0));
    const auto c = make_complex(block_squares(-k / 2, -k / 2, k, k));
    const RhoField f = doyle_field(c, {0.1, 0.05});
    for (auto _ : state) benchmark::DoNotOptimize(layout(f));
    state.SetComplexityN(static_cast<std::int64_t>(c->vertex_count()));
}
BENCHMARK(BM_Layout)->RangeMultiplier(2)->Range(8, 128)->Complexity();

void BM_Verify(benchmark::State& state)
{
    const int k = static_cast<int>(state.range(0));
    const auto c = make_complex(block_squares(-k / 2, -k / 2, k, k));
    const PlanarPattern p = layout(doyle_field(c, {0.1, 0.05}));
    for (auto _ : state) benchmark::DoNotOptimize(verify(p));
}
BENCHMARK(BM_Verify)->Arg(16)->Arg(64)->Unit(benchmark::kMillisecond);

void BM_ZAlphaRadii(benchmark::State& state)
{
    for (auto _ : state) benchmark::DoNotOptimize(zalpha_radii({2.0 / 3.0, static_cast<int>(state.range(0))}));
}
BENCHMARK(BM_ZAlphaRadii)->Arg(10)->Arg(20)->Arg(40)->Unit(benchmark::kMillisecond);

}  // namespace
