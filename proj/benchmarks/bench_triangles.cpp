#include <benchmark/benchmark.h>

#include "random_graphs.hpp"
#include "tricomm/census.hpp"
#include "tricomm/triangles.hpp"

namespace {

using namespace tricomm;

testing::PlantedGraph planted(std::int64_t communities) {
    return testing::planted_partition(static_cast<std::size_t>(communities), 50, 0.3, 0.005, FeatureKind::Binary,
                                      0.8, 0.05, 7);
}

void BM_CountTfAllNodes(benchmark::State &state) {
    const auto g = planted(state.range(0));
    const NodeSet all = NodeSet::all(g.graph.node_count());
    const TriangleOptions opt{static_cast<int>(state.range(1))};
    for (auto _ : state) {
        std::uint64_t total = 0;
        for (NodeId v = 0; v < g.graph.node_count(); ++v)
            total += count_tf(g.graph, {v, all, opt});
        benchmark::DoNotOptimize(total);
    }
    state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(g.graph.node_count()));
}
BENCHMARK(BM_CountTfAllNodes)->ArgsProduct({{4, 16, 64}, {2, 3}})->Unit(benchmark::kMillisecond);

void BM_TotalTriangles(benchmark::State &state) {
    const auto g = planted(state.range(0));
    for (auto _ : state)
        benchmark::DoNotOptimize(total_triangles(g.graph));
    state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(g.graph.edge_count()));
}
BENCHMARK(BM_TotalTriangles)->Arg(16)->Arg(64)->Arg(256)->Unit(benchmark::kMillisecond);

void BM_Census(benchmark::State &state) {
    const auto g = planted(state.range(0));
    for (auto _ : state)
        benchmark::DoNotOptimize(census(g.graph, g.truth, 0));
}
BENCHMARK(BM_Census)->Arg(4)->Arg(16)->Arg(64)->Unit(benchmark::kMillisecond);

} // namespace
