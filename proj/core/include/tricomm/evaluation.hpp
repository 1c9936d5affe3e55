#pragma once

#include <optional>
#include <span>
#include <vector>

#include "tricomm/attributed_graph.hpp"

namespace tricomm {

/// F1 of two sorted, duplicate-free node lists. Zero when they do not intersect.
double f1_score(std::span<const NodeId> a, std::span<const NodeId> b);

/// Symmetric best-match F1: half the mean best F1 of `detected` against
/// `truth` plus half the reverse. Throws UndefinedMetric when either is empty.
double avg_f1(const CommunityCollection &detected, const CommunityCollection &truth);

/// Newman modularity with overlap-aware belonging c_ik = 1 / (communities containing i).
/// Throws UndefinedMetric for a graph without edges.
double modularity(const AttributedGraph &graph, const CommunityCollection &communities);

/// Internal edge density 2E_in / (|C|(|C|-1)); zero for fewer than two members.
double density(const AttributedGraph &graph, std::span<const NodeId> community);

/// -(|C|/n) * sum_l P_l ln P_l with P_l the share of members having feature l (value > 0).
/// Throws UndefinedMetric for a graph without features.
double entropy(const AttributedGraph &graph, std::span<const NodeId> community);

/// Sum of community sizes over n. Throws UndefinedMetric for n = 0.
double overlaps_stat(const CommunityCollection &communities, std::size_t node_count);

struct MetricsReport {
    double avg_f1 = 0.0;
    std::optional<double> modularity_q;           ///< empty when the graph has no edges
    std::vector<double> density_per_community;
    double density_weighted_mean = 0.0;           ///< weighted by community size
    std::optional<std::vector<double>> entropy_per_community; ///< empty without features
    std::optional<double> entropy_total;          ///< sum over communities
    std::size_t community_count = 0;
    double overlaps = 0.0;
};

MetricsReport evaluate(const AttributedGraph &graph, const CommunityCollection &detected,
                       const CommunityCollection &truth);

} // namespace tricomm
