#include "tricomm/evaluation.hpp"

#include <algorithm>
#include <cmath>
#include <unordered_map>

#include "tricomm/errors.hpp"

namespace tricomm {
namespace {

/// For each community of `from`, the best F1 against any community of `to`.
std::vector<double> best_matches(const CommunityCollection &from, const CommunityCollection &to,
                                 const std::vector<std::vector<std::size_t>> &to_index) {
    std::vector<double> best(from.size(), 0.0);
    std::unordered_map<std::size_t, std::size_t> overlap;
    for (std::size_t k = 0; k < from.size(); ++k) {
        overlap.clear();
        for (NodeId v : from.communities[k])
            if (v < to_index.size())
                for (std::size_t j : to_index[v])
                    ++overlap[j];
        const auto size_k = static_cast<double>(from.communities[k].size());
        for (auto [j, shared] : overlap) {
            const double s = static_cast<double>(shared);
            const double f1 = 2.0 * s / (size_k + static_cast<double>(to.communities[j].size()));
            best[k] = std::max(best[k], f1);
        }
    }
    return best;
}

double mean(const std::vector<double> &values) {
    double sum = 0.0;
    for (double v : values)
        sum += v;
    return sum / static_cast<double>(values.size());
}

std::size_t max_node(const CommunityCollection &a) {
    std::size_t n = 0;
    for (const auto &c : a.communities)
        for (NodeId v : c)
            n = std::max<std::size_t>(n, v + 1);
    return n;
}

} // namespace

double f1_score(std::span<const NodeId> a, std::span<const NodeId> b) {
    std::size_t shared = 0;
    auto ia = a.begin();
    auto ib = b.begin();
    while (ia != a.end() && ib != b.end()) {
        if (*ia < *ib) {
            ++ia;
        } else if (*ib < *ia) {
            ++ib;
        } else {
            ++shared;
            ++ia;
            ++ib;
        }
    }
    if (shared == 0)
        return 0.0;
    // 2PR/(P+R) with P = s/|a|, R = s/|b| simplifies to 2s/(|a|+|b|)
    return 2.0 * static_cast<double>(shared) / static_cast<double>(a.size() + b.size());
}

double avg_f1(const CommunityCollection &detected, const CommunityCollection &truth) {
    if (detected.empty() || truth.empty())
        throw UndefinedMetric("AvgF1 needs two non-empty collections");
    const std::size_t n = std::max(max_node(detected), max_node(truth));
    const auto truth_index = truth.membership_index(n);
    const auto detected_index = detected.membership_index(n);
    return 0.5 * mean(best_matches(detected, truth, truth_index)) +
           0.5 * mean(best_matches(truth, detected, detected_index));
}

double modularity(const AttributedGraph &graph, const CommunityCollection &communities) {
    const std::size_t m = graph.edge_count();
    if (m == 0)
        throw UndefinedMetric("modularity is undefined for a graph without edges");
    const std::size_t n = graph.node_count();
    communities.validate(n);
    const auto index = communities.membership_index(n);
    const double two_m = 2.0 * static_cast<double>(m);

    double inside = 0.0; // sum over ordered adjacent pairs of sum_k c_ik c_jk
    for (NodeId u = 0; u < n; ++u) {
        if (index[u].empty())
            continue;
        for (NodeId v : graph.neighbors(u)) {
            if (v <= u || index[v].empty())
                continue;
            std::size_t common = 0;
            auto a = index[u].begin();
            auto b = index[v].begin();
            while (a != index[u].end() && b != index[v].end()) {
                if (*a < *b) {
                    ++a;
                } else if (*b < *a) {
                    ++b;
                } else {
                    ++common;
                    ++a;
                    ++b;
                }
            }
            inside += 2.0 * static_cast<double>(common) /
                      (static_cast<double>(index[u].size()) * static_cast<double>(index[v].size()));
        }
    }

    double expected = 0.0;
    for (const auto &community : communities.communities) {
        double volume = 0.0;
        for (NodeId v : community)
            volume += static_cast<double>(graph.degree(v)) / static_cast<double>(index[v].size());
        expected += volume * volume;
    }
    return inside / two_m - expected / (two_m * two_m);
}

double density(const AttributedGraph &graph, std::span<const NodeId> community) {
    const std::size_t size = community.size();
    if (size < 2)
        return 0.0;
    std::size_t internal = 0;
    for (NodeId u : community)
        for (NodeId v : graph.neighbors(u))
            if (v > u && std::binary_search(community.begin(), community.end(), v))
                ++internal;
    return 2.0 * static_cast<double>(internal) /
           (static_cast<double>(size) * static_cast<double>(size - 1));
}

double entropy(const AttributedGraph &graph, std::span<const NodeId> community) {
    if (!graph.has_features())
        throw UndefinedMetric("entropy needs node features");
    if (community.empty())
        return 0.0;
    const std::size_t p = graph.feature_dim();
    std::vector<std::size_t> present(p, 0);
    for (NodeId v : community) {
        auto row = graph.features(v);
        for (std::size_t l = 0; l < p; ++l)
            if (row[l] > 0.0)
                ++present[l];
    }
    const auto size = static_cast<double>(community.size());
    double sum = 0.0;
    for (std::size_t count : present) {
        if (count == 0)
            continue;
        const double share = static_cast<double>(count) / size;
        sum += share * std::log(share);
    }
    // avoid reporting -0 for pure communities
    return sum == 0.0 ? 0.0 : -(size / static_cast<double>(graph.node_count())) * sum;
}

double overlaps_stat(const CommunityCollection &communities, std::size_t node_count) {
    if (node_count == 0)
        throw UndefinedMetric("overlap rate is undefined for an empty graph");
    std::size_t total = 0;
    for (const auto &c : communities.communities)
        total += c.size();
    return static_cast<double>(total) / static_cast<double>(node_count);
}

MetricsReport evaluate(const AttributedGraph &graph, const CommunityCollection &detected,
                       const CommunityCollection &truth) {
    detected.validate(graph.node_count());
    truth.validate(graph.node_count());
    MetricsReport report;
    report.avg_f1 = avg_f1(detected, truth);
    if (graph.edge_count() > 0)
        report.modularity_q = modularity(graph, detected);
    report.community_count = detected.size();
    report.overlaps = overlaps_stat(detected, graph.node_count());

    double weighted = 0.0;
    std::size_t total_size = 0;
    for (const auto &c : detected.communities) {
        const double d = density(graph, c);
        report.density_per_community.push_back(d);
        weighted += d * static_cast<double>(c.size());
        total_size += c.size();
    }
    report.density_weighted_mean = total_size == 0 ? 0.0 : weighted / static_cast<double>(total_size);

    if (graph.has_features()) {
        std::vector<double> per_community;
        double total = 0.0;
        for (const auto &c : detected.communities) {
            per_community.push_back(entropy(graph, c));
            total += per_community.back();
        }
        report.entropy_per_community = std::move(per_community);
        report.entropy_total = total;
    }
    return report;
}

} // namespace tricomm
