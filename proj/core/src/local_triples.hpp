#pragma once

#include <span>

#include "tricomm/attributed_graph.hpp"

namespace tricomm::detail {

/// Visits every unordered pair {x, y} that forms a topological triangle with
/// `anchor` or a feature triangle having at least `min_feature_edges` edges,
/// for min_feature_edges >= 2. Each pair is visited once with x a neighbor of
/// the anchor; `y_is_neighbor` tells whether y is one too.
///
///   fn(NodeId x, NodeId y, bool y_is_neighbor, bool topological, bool feature)
template <class Fn>
void for_each_local_triple(const AttributedGraph &graph, NodeId anchor, int min_feature_edges,
                           Fn &&fn) {
    const auto around = graph.neighbors(anchor);
    const bool features = graph.has_features();
    const bool wedges = features && min_feature_edges <= 2;

    for (std::size_t a = 0; a < around.size(); ++a) {
        const NodeId x = around[a];
        const auto x_row = graph.neighbors(x);
        const bool x_shares = features && graph.signatures_intersect(anchor, x);
        auto cursor = std::lower_bound(x_row.begin(), x_row.end(), x);

        if (wedges && x_shares) {
            // every later neighbor y: wedge x-anchor-y has >= 2 edges
            for (std::size_t b = a + 1; b < around.size(); ++b) {
                const NodeId y = around[b];
                while (cursor != x_row.end() && *cursor < y)
                    ++cursor;
                const bool closed = cursor != x_row.end() && *cursor == y;
                const bool feature = graph.signatures_intersect(anchor, x, y);
                if (closed || feature)
                    fn(x, y, true, closed, feature);
            }
        } else {
            // only closed triangles can count
            auto y_it = around.begin() + static_cast<std::ptrdiff_t>(a + 1);
            while (cursor != x_row.end() && y_it != around.end()) {
                if (*cursor < *y_it) {
                    ++cursor;
                } else if (*y_it < *cursor) {
                    ++y_it;
                } else {
                    const NodeId y = *y_it;
                    const bool feature = features && x_shares && graph.signatures_intersect(anchor, x, y);
                    fn(x, y, true, true, feature);
                    ++cursor;
                    ++y_it;
                }
            }
        }

        if (wedges && x_shares) {
            // two-hop y reached through x only: edges anchor-x and x-y
            auto n_it = around.begin();
            for (NodeId y : x_row) {
                if (y == anchor)
                    continue;
                while (n_it != around.end() && *n_it < y)
                    ++n_it;
                if (n_it != around.end() && *n_it == y)
                    continue;
                if (graph.signatures_intersect(anchor, x, y))
                    fn(x, y, false, false, true);
            }
        }
    }
}

inline std::uint64_t triple_weight(bool topological, bool feature, bool sum) {
    if (sum)
        return std::uint64_t{topological} + std::uint64_t{feature};
    return (topological || feature) ? 1 : 0;
}

} // namespace tricomm::detail
