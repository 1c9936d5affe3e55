#pragma once

#include <algorithm>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

#include "tricomm/attributed_graph.hpp"

namespace tricomm {

/// Sorted, duplicate-free set of node ids with O(log n) membership.
class NodeSet {
public:
    NodeSet() = default;
    explicit NodeSet(std::vector<NodeId> ids);
    NodeSet(std::initializer_list<NodeId> ids) : NodeSet(std::vector<NodeId>(ids)) {}

    static NodeSet all(std::size_t node_count);
    static NodeSet neighbors_of(const AttributedGraph &graph, NodeId v);

    bool contains(NodeId v) const noexcept {
        return std::binary_search(ids_.begin(), ids_.end(), v);
    }
    std::size_t size() const noexcept { return ids_.size(); }
    bool empty() const noexcept { return ids_.empty(); }
    std::span<const NodeId> ids() const noexcept { return ids_; }
    auto begin() const noexcept { return ids_.begin(); }
    auto end() const noexcept { return ids_.end(); }

    NodeSet united_with(const NodeSet &other) const;
    NodeSet without(const NodeSet &other) const;
    NodeSet with(NodeId v) const;
    NodeSet without(NodeId v) const;

    bool operator==(const NodeSet &) const = default;

private:
    std::vector<NodeId> ids_;
};

} // namespace tricomm
