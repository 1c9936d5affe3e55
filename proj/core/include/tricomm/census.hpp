#pragma once

#include <array>
#include <cstdint>

#include "tricomm/attributed_graph.hpp"

namespace tricomm {

/**
 * Whole-graph triangle census against a ground-truth cover.
 *
 * "in ground truth" triples have all three nodes covered by some community
 * (not necessarily the same one); "same community" triples share at least one
 * community and are counted once however many communities they share.
 * Feature triples are node triples with a shared feature dimension (see
 * AttributedGraph) and at least `min_feature_edges` topological edges;
 * `feat_edge_breakdown[e]` counts same-community feature triples with exactly
 * e edges, and entries below min_feature_edges stay zero.
 */
struct CensusReport {
    int min_feature_edges = 0;
    std::uint64_t topo_in_groundtruth = 0;
    std::uint64_t topo_same_community = 0;
    std::uint64_t feat_in_groundtruth = 0;
    std::uint64_t feat_same_community = 0;
    std::array<std::uint64_t, 4> feat_edge_breakdown{};
};

/// Throws UnsupportedOperation when the graph has no features.
CensusReport census(const AttributedGraph &graph, const CommunityCollection &ground_truth,
                    int min_feature_edges = 0);

} // namespace tricomm
