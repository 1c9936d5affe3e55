#pragma once

#include <cstdint>
#include <vector>

#include "tricomm/attributed_graph.hpp"
#include "tricomm/node_set.hpp"

namespace tricomm {

inline constexpr int kDefaultMinFeatureEdges = 2;

/// How tf combines the two triangle types for a triple that is both.
enum class TriangleCombine {
    Sum,   ///< counted once as topological and once as feature triangle
    Union, ///< counted once
};

struct TriangleOptions {
    /// Minimum number of topological edges (0..3) a triple needs to count as a feature triangle.
    int min_feature_edges = kDefaultMinFeatureEdges;
    TriangleCombine combine = TriangleCombine::Sum;
};

/// Throws ValidationError unless min_feature_edges is in 0..3.
void validate(const TriangleOptions &options);

/**
 * Triangles through `anchor` restricted to `node_set`.
 *
 * A pair {x, y} is counted when both lie in node_set \ {anchor}. Vertex
 * counts (vt, vtf) count y in node_set \ {anchor} that closes at least one
 * counted triangle with the anchor; the third node of that triangle may be
 * any node of the graph.
 */
struct TriangleQuery {
    NodeId anchor;
    const NodeSet &node_set;
    TriangleOptions options = {};
};

/// Closed feature triangle test. Throws UnsupportedOperation when the graph has no features.
bool is_feature_triangle(const AttributedGraph &graph, NodeId x, NodeId y, NodeId z);

/// Number of edges among three distinct nodes (0..3).
int edges_among(const AttributedGraph &graph, NodeId x, NodeId y, NodeId z);

std::uint64_t count_t(const AttributedGraph &graph, const TriangleQuery &query);
std::uint64_t count_vt(const AttributedGraph &graph, const TriangleQuery &query);
/// Topological plus feature triangles; a graph without features degenerates to count_t.
std::uint64_t count_tf(const AttributedGraph &graph, const TriangleQuery &query);
std::uint64_t count_vtf(const AttributedGraph &graph, const TriangleQuery &query);

/// Sorted list of nodes y != anchor that close a topological triangle with the anchor.
std::vector<NodeId> topological_participants(const AttributedGraph &graph, NodeId anchor);
/// Sorted list of nodes y != anchor that close a counted (topological or feature) triangle.
std::vector<NodeId> triangle_participants(const AttributedGraph &graph, NodeId anchor,
                                          const TriangleOptions &options);

/// Total number of topological triangles in the graph.
std::uint64_t total_triangles(const AttributedGraph &graph);

} // namespace tricomm
