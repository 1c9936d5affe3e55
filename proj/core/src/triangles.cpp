#include "tricomm/triangles.hpp"

#include <algorithm>
#include <bit>
#include <string>

#include "local_triples.hpp"
#include "tricomm/errors.hpp"

namespace tricomm {
namespace {

bool feature_triple(const AttributedGraph &graph, NodeId i, NodeId x, NodeId y, int min_edges) {
    return graph.has_features() && graph.signatures_intersect(i, x, y) &&
           edges_among(graph, i, x, y) >= min_edges;
}

/// Exhaustive pair scan over node_set \ {anchor}; used when feature triangles
/// may contain fewer than two edges.
template <class Fn>
void for_each_pair_in(const AttributedGraph &graph, const TriangleQuery &q, Fn &&fn) {
    const auto ids = q.node_set.ids();
    for (std::size_t a = 0; a < ids.size(); ++a) {
        if (ids[a] == q.anchor)
            continue;
        for (std::size_t b = a + 1; b < ids.size(); ++b) {
            if (ids[b] == q.anchor)
                continue;
            const NodeId x = ids[a];
            const NodeId y = ids[b];
            const bool topo = graph.has_edge(q.anchor, x) && graph.has_edge(q.anchor, y) &&
                              graph.has_edge(x, y);
            const bool feat = feature_triple(graph, q.anchor, x, y, q.options.min_feature_edges);
            if (topo || feat)
                fn(x, y, topo, feat);
        }
    }
}

} // namespace

void validate(const TriangleOptions &options) {
    if (options.min_feature_edges < 0 || options.min_feature_edges > 3)
        throw ValidationError("min_feature_edges must be in 0..3, got " +
                              std::to_string(options.min_feature_edges));
}

bool is_feature_triangle(const AttributedGraph &graph, NodeId x, NodeId y, NodeId z) {
    if (graph.feature_kind() == FeatureKind::None)
        throw UnsupportedOperation("feature triangles need a graph with node features");
    return graph.signatures_intersect(x, y, z);
}

int edges_among(const AttributedGraph &graph, NodeId x, NodeId y, NodeId z) {
    return int{graph.has_edge(x, y)} + int{graph.has_edge(x, z)} + int{graph.has_edge(y, z)};
}

std::uint64_t count_t(const AttributedGraph &graph, const TriangleQuery &q) {
    std::uint64_t count = 0;
    detail::for_each_local_triple(graph, q.anchor, 3, [&](NodeId x, NodeId y, bool, bool topo, bool) {
        if (topo && q.node_set.contains(x) && q.node_set.contains(y))
            ++count;
    });
    return count;
}

std::vector<NodeId> topological_participants(const AttributedGraph &graph, NodeId anchor) {
    std::vector<NodeId> out;
    detail::for_each_local_triple(graph, anchor, 3, [&](NodeId x, NodeId y, bool, bool topo, bool) {
        if (topo) {
            out.push_back(x);
            out.push_back(y);
        }
    });
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

std::uint64_t count_vt(const AttributedGraph &graph, const TriangleQuery &q) {
    const auto participants = topological_participants(graph, q.anchor);
    return static_cast<std::uint64_t>(std::count_if(
        participants.begin(), participants.end(), [&](NodeId y) { return q.node_set.contains(y); }));
}

std::uint64_t count_tf(const AttributedGraph &graph, const TriangleQuery &q) {
    validate(q.options);
    const bool sum = q.options.combine == TriangleCombine::Sum;
    std::uint64_t count = 0;
    if (!graph.has_features() || q.options.min_feature_edges >= 2) {
        detail::for_each_local_triple(graph, q.anchor, q.options.min_feature_edges,
                                      [&](NodeId x, NodeId y, bool, bool topo, bool feat) {
                                          if (q.node_set.contains(x) && q.node_set.contains(y))
                                              count += detail::triple_weight(topo, feat, sum);
                                      });
    } else {
        for_each_pair_in(graph, q, [&](NodeId, NodeId, bool topo, bool feat) {
            count += detail::triple_weight(topo, feat, sum);
        });
    }
    return count;
}

std::vector<NodeId> triangle_participants(const AttributedGraph &graph, NodeId anchor,
                                          const TriangleOptions &options) {
    validate(options);
    const int m = options.min_feature_edges;
    if (!graph.has_features() || m >= 2) {
        std::vector<NodeId> out;
        detail::for_each_local_triple(graph, anchor, m, [&](NodeId x, NodeId y, bool, bool, bool) {
            out.push_back(x);
            out.push_back(y);
        });
        std::sort(out.begin(), out.end());
        out.erase(std::unique(out.begin(), out.end()), out.end());
        return out;
    }

    // m <= 1: a feature partner can sit anywhere in the graph
    auto topo = topological_participants(graph, anchor);
    const auto sig_i = graph.signature(anchor);
    auto popular_shared = [&](NodeId y) {
        // some dimension shared by anchor and y that a third node also has
        const auto sig_y = graph.signature(y);
        for (std::size_t w = 0; w < sig_i.size(); ++w) {
            std::uint64_t bits = sig_i[w] & sig_y[w];
            while (bits) {
                const int bit = std::countr_zero(bits);
                bits &= bits - 1;
                if (graph.signature_support(w * 64 + static_cast<std::size_t>(bit)) >= 3)
                    return true;
            }
        }
        return false;
    };
    std::vector<NodeId> out;
    for (NodeId y = 0; y < graph.node_count(); ++y) {
        if (y == anchor)
            continue;
        if (std::binary_search(topo.begin(), topo.end(), y)) {
            out.push_back(y);
            continue;
        }
        if (!graph.signatures_intersect(anchor, y))
            continue;
        bool found = false;
        if (m == 0 || graph.has_edge(anchor, y)) {
            found = popular_shared(y);
        } else {
            // the single edge must touch the third node
            for (auto row : {graph.neighbors(anchor), graph.neighbors(y)}) {
                for (NodeId z : row) {
                    if (z != anchor && z != y && graph.signatures_intersect(anchor, y, z)) {
                        found = true;
                        break;
                    }
                }
                if (found)
                    break;
            }
        }
        if (found)
            out.push_back(y);
    }
    return out;
}

std::uint64_t count_vtf(const AttributedGraph &graph, const TriangleQuery &q) {
    const auto participants = triangle_participants(graph, q.anchor, q.options);
    return static_cast<std::uint64_t>(std::count_if(
        participants.begin(), participants.end(), [&](NodeId y) { return q.node_set.contains(y); }));
}

std::uint64_t total_triangles(const AttributedGraph &graph) {
    std::uint64_t total = 0;
    for (NodeId u = 0; u < graph.node_count(); ++u) {
        auto row_u = graph.neighbors(u);
        for (NodeId v : row_u) {
            if (v <= u)
                continue;
            auto row_v = graph.neighbors(v);
            auto a = std::upper_bound(row_u.begin(), row_u.end(), v);
            auto b = std::upper_bound(row_v.begin(), row_v.end(), v);
            while (a != row_u.end() && b != row_v.end()) {
                if (*a < *b) {
                    ++a;
                } else if (*b < *a) {
                    ++b;
                } else {
                    ++total;
                    ++a;
                    ++b;
                }
            }
        }
    }
    return total;
}

} // namespace tricomm
