#include "tricomm/quality.hpp"

#include <algorithm>
#include <bit>
#include <cmath>

#include "local_triples.hpp"

namespace tricomm {
namespace {

std::uint64_t count_in(std::span<const NodeId> sorted_ids, const NodeSet &set) {
    return static_cast<std::uint64_t>(
        std::count_if(sorted_ids.begin(), sorted_ids.end(), [&](NodeId y) { return set.contains(y); }));
}

double ratio(double num, double den) { return den == 0.0 ? 0.0 : num / den; }

} // namespace

double wcc_node(const AttributedGraph &graph, NodeId v, const NodeSet &community) {
    std::uint64_t t_all = 0;
    std::uint64_t t_in = 0;
    detail::for_each_local_triple(graph, v, 3, [&](NodeId x, NodeId y, bool, bool topo, bool) {
        if (!topo)
            return;
        ++t_all;
        if (community.contains(x) && community.contains(y))
            ++t_in;
    });
    if (t_all == 0)
        return 0.0;
    const auto participants = topological_participants(graph, v);
    const auto vt_all = static_cast<double>(participants.size());
    const auto vt_outside = static_cast<double>(participants.size() - count_in(participants, community));
    const auto others = static_cast<double>(community.size() - (community.contains(v) ? 1 : 0));
    return (static_cast<double>(t_in) / static_cast<double>(t_all)) * ratio(vt_all, others + vt_outside);
}

double wcc_partition(const AttributedGraph &graph, const CommunityCollection &communities) {
    if (graph.node_count() == 0)
        return 0.0;
    double total = 0.0;
    for (const auto &members : communities.communities) {
        const NodeSet community(members);
        for (NodeId v : community)
            total += wcc_node(graph, v, community);
    }
    return total / static_cast<double>(graph.node_count());
}

double wcc_star_node(const AttributedGraph &graph, NodeId v, const NodeSet &community,
                     const TriangleOptions &options) {
    validate(options);
    const NodeSet around = NodeSet::neighbors_of(graph, v);
    const NodeSet reference = around.united_with(community);

    std::uint64_t tf_community = 0;
    std::uint64_t tf_reference = 0;
    if (!graph.has_features() || options.min_feature_edges >= 2) {
        const bool sum = options.combine == TriangleCombine::Sum;
        detail::for_each_local_triple(graph, v, options.min_feature_edges,
                                      [&](NodeId x, NodeId y, bool, bool topo, bool feat) {
                                          const auto w = detail::triple_weight(topo, feat, sum);
                                          if (reference.contains(x) && reference.contains(y))
                                              tf_reference += w;
                                          if (community.contains(x) && community.contains(y))
                                              tf_community += w;
                                      });
    } else {
        tf_community = count_tf(graph, {v, community, options});
        tf_reference = count_tf(graph, {v, reference, options});
    }
    if (tf_reference == 0)
        return 0.0;

    const auto participants = triangle_participants(graph, v, options);
    const auto vtf_reference = static_cast<double>(count_in(participants, reference));
    const auto vtf_around = static_cast<double>(count_in(participants, around));
    const auto others = static_cast<double>(community.size() - (community.contains(v) ? 1 : 0));
    return (static_cast<double>(tf_community) / static_cast<double>(tf_reference)) *
           ratio(vtf_reference, others + vtf_around);
}

double tightness(const AttributedGraph &graph, NodeId v, const NodeSet &community) {
    const std::size_t d = graph.degree(v);
    if (d == 0 || community.empty())
        return 0.0;
    const auto inside = count_in(graph.neighbors(v), community);
    return static_cast<double>(inside) / (static_cast<double>(d) * static_cast<double>(community.size()));
}

double feature_distance(const AttributedGraph &graph, NodeId x, NodeId y) {
    if (graph.feature_kind() == FeatureKind::Binary) {
        // binary rows are exactly their signatures
        auto a = graph.signature(x);
        auto b = graph.signature(y);
        int bits = 0;
        for (std::size_t w = 0; w < a.size(); ++w)
            bits += std::popcount(a[w] ^ b[w]);
        return static_cast<double>(bits);
    }
    auto a = graph.features(x);
    auto b = graph.features(y);
    double sum = 0.0;
    for (std::size_t l = 0; l < a.size(); ++l)
        sum += std::abs(a[l] - b[l]);
    return sum;
}

double homogeneity(const AttributedGraph &graph, NodeId v, const NodeSet &community) {
    if (!graph.has_features() || community.empty())
        return 0.0;
    double sum = 0.0;
    for (NodeId u : community)
        if (u != v)
            sum += feature_distance(graph, v, u);
    return sum / (static_cast<double>(graph.feature_dim()) * static_cast<double>(community.size()));
}

UtilityBreakdown node_utility(const AttributedGraph &graph, NodeId v, const NodeSet &community,
                              const TriangleOptions &options) {
    const NodeSet joined = community.with(v);
    UtilityBreakdown out;
    out.wcc_star = wcc_star_node(graph, v, joined, options);
    out.tightness = tightness(graph, v, joined);
    out.homogeneity = homogeneity(graph, v, joined);
    out.utility = out.wcc_star + out.tightness - out.homogeneity;
    return out;
}

double objective(const AttributedGraph &graph, const CommunityCollection &communities,
                 const TriangleOptions &options) {
    double total = 0.0;
    for (const auto &members : communities.communities) {
        const NodeSet community(members);
        for (NodeId v : community)
            total += node_utility(graph, v, community, options).utility;
    }
    return total;
}

} // namespace tricomm
