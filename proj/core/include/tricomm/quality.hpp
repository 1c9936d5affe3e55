#pragma once

#include "tricomm/attributed_graph.hpp"
#include "tricomm/node_set.hpp"
#include "tricomm/triangles.hpp"

namespace tricomm {

/// The three addends of a node's utility in a community.
struct UtilityBreakdown {
    double wcc_star = 0.0;
    double tightness = 0.0;
    double homogeneity = 0.0;
    double utility = 0.0; ///< wcc_star + tightness - homogeneity
};

/// Weighted community clustering of `v` in `community` (topological triangles only).
double wcc_node(const AttributedGraph &graph, NodeId v, const NodeSet &community);

/// Size-weighted mean of wcc_node over every membership, normalised by |V|.
double wcc_partition(const AttributedGraph &graph, const CommunityCollection &communities);

/// Extended WCC over topological plus feature triangles, with the neighbourhood
/// union N(v) ∪ community as the reference set. Does not depend on whether v
/// itself is listed in `community`.
double wcc_star_node(const AttributedGraph &graph, NodeId v, const NodeSet &community,
                     const TriangleOptions &options = {});

/// Edges from v into the community over d_v * |community|. Zero for isolated v or an empty set.
double tightness(const AttributedGraph &graph, NodeId v, const NodeSet &community);

/// Mean L1 feature distance from v to the community members, divided by p.
/// Zero without features or for an empty set.
double homogeneity(const AttributedGraph &graph, NodeId v, const NodeSet &community);

double feature_distance(const AttributedGraph &graph, NodeId x, NodeId y);

/// Utility of v in `community` with v hypothetically added to it.
UtilityBreakdown node_utility(const AttributedGraph &graph, NodeId v, const NodeSet &community,
                              const TriangleOptions &options = {});

/// Sum of node_utility over every (node, community) membership.
double objective(const AttributedGraph &graph, const CommunityCollection &communities,
                 const TriangleOptions &options = {});

} // namespace tricomm
