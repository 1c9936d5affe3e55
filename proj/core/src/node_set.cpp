#include "tricomm/node_set.hpp"

#include <iterator>
#include <numeric>

namespace tricomm {

NodeSet::NodeSet(std::vector<NodeId> ids) : ids_(std::move(ids)) {
    std::sort(ids_.begin(), ids_.end());
    ids_.erase(std::unique(ids_.begin(), ids_.end()), ids_.end());
}

NodeSet NodeSet::all(std::size_t node_count) {
    NodeSet out;
    out.ids_.resize(node_count);
    std::iota(out.ids_.begin(), out.ids_.end(), NodeId{0});
    return out;
}

NodeSet NodeSet::neighbors_of(const AttributedGraph &graph, NodeId v) {
    NodeSet out;
    auto row = graph.neighbors(v);
    out.ids_.assign(row.begin(), row.end());
    return out;
}

NodeSet NodeSet::united_with(const NodeSet &other) const {
    NodeSet out;
    out.ids_.reserve(ids_.size() + other.ids_.size());
    std::set_union(ids_.begin(), ids_.end(), other.ids_.begin(), other.ids_.end(),
                   std::back_inserter(out.ids_));
    return out;
}

NodeSet NodeSet::without(const NodeSet &other) const {
    NodeSet out;
    std::set_difference(ids_.begin(), ids_.end(), other.ids_.begin(), other.ids_.end(),
                        std::back_inserter(out.ids_));
    return out;
}

NodeSet NodeSet::with(NodeId v) const {
    if (contains(v))
        return *this;
    NodeSet out = *this;
    out.ids_.insert(std::lower_bound(out.ids_.begin(), out.ids_.end(), v), v);
    return out;
}

NodeSet NodeSet::without(NodeId v) const {
    NodeSet out = *this;
    auto it = std::lower_bound(out.ids_.begin(), out.ids_.end(), v);
    if (it != out.ids_.end() && *it == v)
        out.ids_.erase(it);
    return out;
}

} // namespace tricomm
