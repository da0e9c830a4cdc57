#include <rado/canonicity.hpp>
#include <rado/generation.hpp>
#include <rado/ramsey.hpp>

#include <benchmark/benchmark.h>

using namespace rado;

static void BM_CheckExtensionPaley(benchmark::State & state)
{
    const auto g = build_paley(static_cast<std::uint32_t>(state.range(0))).graph;
    for (auto _ : state)
        benchmark::DoNotOptimize(check_extension(g, 3));
}
BENCHMARK(BM_CheckExtensionPaley)->Arg(29)->Arg(101)->Unit(benchmark::kMillisecond);

static void BM_BuildEc(benchmark::State & state)
{
    std::uint64_t seed = 0;
    for (auto _ : state)
        benchmark::DoNotOptimize(build_ec(static_cast<unsigned>(state.range(0)), seed++));
}
BENCHMARK(BM_BuildEc)->Arg(2)->Arg(3)->Unit(benchmark::kMillisecond);

static void BM_FindEmbeddings(benchmark::State & state)
{
    const auto host = build_paley(101).graph;
    const auto pattern = cycle_graph(static_cast<std::size_t>(state.range(0)));
    for (auto _ : state)
        benchmark::DoNotOptimize(find_embeddings(pattern, host, 10000));
}
BENCHMARK(BM_FindEmbeddings)->Arg(4)->Arg(5)->Unit(benchmark::kMillisecond);

static void BM_VerifyArrowK6(benchmark::State & state)
{
    const ArrowQuery q{as_structure(complete_graph(6)), as_structure(complete_graph(3)), as_structure(complete_graph(2)), 2, false};
    ArrowOptions options;
    options.threads = static_cast<unsigned>(state.range(0));
    for (auto _ : state)
        benchmark::DoNotOptimize(verify_arrow(q, options));
}
BENCHMARK(BM_VerifyArrowK6)->Arg(1)->Arg(2)->Unit(benchmark::kMillisecond);

static void BM_ClassifyParityFour(benchmark::State & state)
{
    const auto host = build_paley(29).graph;
    const auto r = Relation::parity(4);
    for (auto _ : state)
        benchmark::DoNotOptimize(classify_reduct(r, host, 3));
}
BENCHMARK(BM_ClassifyParityFour)->Unit(benchmark::kMillisecond);

static void BM_OrbitClosureFive(benchmark::State & state)
{
    const std::array gens{OrbitGenerator::Switch, OrbitGenerator::DeleteEdge};
    for (auto _ : state)
        benchmark::DoNotOptimize(orbit_closure(cycle_graph(5), gens));
}
BENCHMARK(BM_OrbitClosureFive)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
