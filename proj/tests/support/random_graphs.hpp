#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "tricomm/attributed_graph.hpp"

namespace tricomm::testing {

/// G(n, p) with optional random features of the given kind.
AttributedGraph random_graph(std::size_t n, double edge_probability, FeatureKind kind,
                             std::size_t dim, std::uint64_t seed);

/// Random subset of 0..n-1 (each node kept with probability `keep`).
std::vector<NodeId> random_subset(std::size_t n, double keep, std::mt19937_64 &rng);

/// Random cover of 0..n-1 with `k` communities; every node lands in one
/// community and, with probability `overlap`, in a second one.
CommunityCollection random_cover(std::size_t n, std::size_t k, double overlap, std::mt19937_64 &rng);

struct PlantedGraph {
    AttributedGraph graph;
    CommunityCollection truth;
};

/// Planted partition with community-correlated features: nodes of community c
/// carry feature c with probability `signal` and every other feature with
/// probability `noise` (binary), or a dominant weight on dimension c (continuous).
PlantedGraph planted_partition(std::size_t communities, std::size_t community_size, double p_in,
                               double p_out, FeatureKind kind, double signal, double noise,
                               std::uint64_t seed);

/// Two triangles {0,1,2} and {3,4,5} joined by the bridge 2-3. Features (1,0)
/// on the left and (0,1) on the right; `bridge` false drops the bridge.
AttributedGraph two_triangles(bool bridge = true);

/// Complete graph on n nodes with identical all-ones binary features of width `dim`.
AttributedGraph clique(std::size_t n, std::size_t dim = 1);

} // namespace tricomm::testing
