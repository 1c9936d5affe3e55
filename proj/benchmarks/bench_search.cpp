#include <benchmark/benchmark.h>

#include "random_graphs.hpp"
#include "tricomm/evaluation.hpp"
#include "tricomm/local_search.hpp"

namespace {

using namespace tricomm;

void BM_LsfRun(benchmark::State &state) {
    const auto g = testing::planted_partition(static_cast<std::size_t>(state.range(0)), 50, 0.3, 0.005,
                                              FeatureKind::Binary, 0.8, 0.05, 11);
    LsfConfig config;
    config.trace_objective = state.range(1) != 0;
    std::size_t rounds = 0;
    for (auto _ : state) {
        const auto result = run(g.graph, config);
        rounds = result.trace.size();
        benchmark::DoNotOptimize(result.communities);
    }
    state.counters["rounds"] = static_cast<double>(rounds);
    state.counters["nodes"] = static_cast<double>(g.graph.node_count());
}
BENCHMARK(BM_LsfRun)->ArgsProduct({{4, 16, 64}, {0, 1}})->Unit(benchmark::kMillisecond);

void BM_Modularity(benchmark::State &state) {
    const auto g = testing::planted_partition(static_cast<std::size_t>(state.range(0)), 50, 0.3, 0.005,
                                              FeatureKind::None, 0, 0, 3);
    for (auto _ : state)
        benchmark::DoNotOptimize(modularity(g.graph, g.truth));
}
BENCHMARK(BM_Modularity)->Arg(16)->Arg(256)->Unit(benchmark::kMicrosecond);

} // namespace
