#include "tricomm/attributed_graph.hpp"

#include <algorithm>
#include <bit>
#include <string>

#include "tricomm/errors.hpp"

namespace tricomm {

std::string_view to_string(FeatureKind kind) {
    switch (kind) {
    case FeatureKind::Binary:
        return "binary";
    case FeatureKind::Continuous:
        return "continuous";
    case FeatureKind::None:
        break;
    }
    return "none";
}

FeatureKind parse_feature_kind(std::string_view text) {
    if (text == "binary")
        return FeatureKind::Binary;
    if (text == "continuous")
        return FeatureKind::Continuous;
    if (text == "none")
        return FeatureKind::None;
    throw ValidationError("unknown feature kind '" + std::string(text) + "'");
}

AttributedGraph::AttributedGraph(std::size_t node_count, std::span<const Edge> edges,
                                 std::vector<OriginalId> original_ids) {
    if (original_ids.empty()) {
        original_ids.resize(node_count);
        for (std::size_t v = 0; v < node_count; ++v)
            original_ids[v] = static_cast<OriginalId>(v);
    } else if (original_ids.size() != node_count) {
        throw ValidationError("original id table has " + std::to_string(original_ids.size()) +
                              " entries for " + std::to_string(node_count) + " nodes");
    }
    original_ids_ = std::move(original_ids);
    id_index_.reserve(node_count);
    for (std::size_t v = 0; v < node_count; ++v) {
        if (!id_index_.emplace(original_ids_[v], static_cast<NodeId>(v)).second)
            throw ValidationError("duplicate original node id " +
                                  std::to_string(original_ids_[v]));
    }

    std::vector<std::size_t> counts(node_count + 1, 0);
    for (auto [u, v] : edges) {
        if (u >= node_count || v >= node_count)
            throw ValidationError("edge endpoint out of range");
        if (u == v)
            continue;
        ++counts[u + 1];
        ++counts[v + 1];
    }
    offsets_.assign(node_count + 1, 0);
    for (std::size_t v = 0; v < node_count; ++v)
        offsets_[v + 1] = offsets_[v] + counts[v + 1];
    adjacency_.resize(offsets_.back());
    std::vector<std::size_t> cursor(offsets_.begin(), offsets_.end() - 1);
    for (auto [u, v] : edges) {
        if (u == v)
            continue;
        adjacency_[cursor[u]++] = v;
        adjacency_[cursor[v]++] = u;
    }

    // sort + dedupe each row, then compact the CSR arrays
    std::size_t write = 0;
    std::size_t row_begin = 0;
    for (std::size_t v = 0; v < node_count; ++v) {
        auto first = adjacency_.begin() + static_cast<std::ptrdiff_t>(row_begin);
        auto last = adjacency_.begin() + static_cast<std::ptrdiff_t>(offsets_[v + 1]);
        std::sort(first, last);
        auto unique_end = std::unique(first, last);
        row_begin = offsets_[v + 1];
        offsets_[v] = write;
        for (auto it = first; it != unique_end; ++it)
            adjacency_[write++] = *it;
        max_degree_ = std::max<std::size_t>(max_degree_, static_cast<std::size_t>(unique_end - first));
    }
    offsets_[node_count] = write;
    adjacency_.resize(write);
    adjacency_.shrink_to_fit();
}

AttributedGraph AttributedGraph::with_features(FeatureKind kind, std::size_t dim,
                                               std::vector<double> rows) const {
    const std::size_t n = node_count();
    if (rows.size() != n * dim)
        throw ValidationError("feature matrix has " + std::to_string(rows.size()) +
                              " entries, expected " + std::to_string(n * dim));
    for (std::size_t idx = 0; idx < rows.size(); ++idx) {
        const double value = rows[idx];
        const bool ok = kind == FeatureKind::Binary
                            ? (value == 0.0 || value == 1.0)
                            : (kind == FeatureKind::Continuous ? value >= 0.0 : value == 0.0);
        if (!ok)
            throw ValidationError("feature value " + std::to_string(value) + " of node " +
                                  std::to_string(original_ids_[idx / dim]) + " (dimension " +
                                  std::to_string(idx % dim) + ") is invalid for " +
                                  std::string(to_string(kind)) + " features");
    }
    AttributedGraph out = *this;
    out.kind_ = dim == 0 ? FeatureKind::None : kind;
    out.dim_ = out.kind_ == FeatureKind::None ? 0 : dim;
    out.features_ = out.kind_ == FeatureKind::None ? std::vector<double>{} : std::move(rows);
    out.build_signatures();
    return out;
}

void AttributedGraph::build_signatures() {
    const std::size_t n = node_count();
    sig_words_ = (dim_ + 63) / 64;
    signatures_.assign(n * sig_words_, 0);
    support_.assign(dim_, 0);
    if (kind_ == FeatureKind::None)
        return;
    for (std::size_t v = 0; v < n; ++v) {
        auto row = features(static_cast<NodeId>(v));
        std::uint64_t *sig = signatures_.data() + v * sig_words_;
        if (kind_ == FeatureKind::Binary) {
            for (std::size_t l = 0; l < dim_; ++l) {
                if (row[l] == 1.0) {
                    sig[l / 64] |= std::uint64_t{1} << (l % 64);
                    ++support_[l];
                }
            }
        } else {
            // max_element returns the first maximum: lowest index wins ties
            auto best = std::max_element(row.begin(), row.end());
            if (*best > 0.0) {
                const auto l = static_cast<std::size_t>(best - row.begin());
                sig[l / 64] |= std::uint64_t{1} << (l % 64);
                ++support_[l];
            }
        }
    }
}

bool AttributedGraph::has_edge(NodeId u, NodeId v) const noexcept {
    if (degree(u) > degree(v))
        std::swap(u, v);
    auto row = neighbors(u);
    return std::binary_search(row.begin(), row.end(), v);
}

std::vector<Edge> AttributedGraph::edges() const {
    std::vector<Edge> out;
    out.reserve(edge_count());
    for (NodeId u = 0; u < node_count(); ++u)
        for (NodeId v : neighbors(u))
            if (u < v)
                out.emplace_back(u, v);
    return out;
}

bool AttributedGraph::signatures_intersect(NodeId x, NodeId y) const noexcept {
    auto a = signature(x);
    auto b = signature(y);
    for (std::size_t w = 0; w < sig_words_; ++w)
        if (a[w] & b[w])
            return true;
    return false;
}

bool AttributedGraph::signatures_intersect(NodeId x, NodeId y, NodeId z) const noexcept {
    auto a = signature(x);
    auto b = signature(y);
    auto c = signature(z);
    for (std::size_t w = 0; w < sig_words_; ++w)
        if (a[w] & b[w] & c[w])
            return true;
    return false;
}

std::optional<NodeId> AttributedGraph::compact_id(OriginalId id) const {
    auto it = id_index_.find(id);
    if (it == id_index_.end())
        return std::nullopt;
    return it->second;
}

void AttributedGraph::check_invariants() const {
    const std::size_t n = node_count();
    std::size_t degree_sum = 0;
    for (NodeId v = 0; v < n; ++v) {
        auto row = neighbors(v);
        degree_sum += row.size();
        for (std::size_t k = 0; k < row.size(); ++k) {
            if (row[k] == v)
                throw ValidationError("self-loop at node " + std::to_string(original_id(v)));
            if (k > 0 && row[k - 1] >= row[k])
                throw ValidationError("adjacency of node " + std::to_string(original_id(v)) +
                                      " is not strictly sorted");
            auto back = neighbors(row[k]);
            if (!std::binary_search(back.begin(), back.end(), v))
                throw ValidationError("asymmetric edge at node " + std::to_string(original_id(v)));
        }
    }
    if (degree_sum != 2 * edge_count())
        throw ValidationError("degree sum does not equal 2m");
    for (double value : features_) {
        if (kind_ == FeatureKind::Binary && value != 0.0 && value != 1.0)
            throw ValidationError("non-binary value in binary feature matrix");
        if (kind_ == FeatureKind::Continuous && value < 0.0)
            throw ValidationError("negative value in continuous feature matrix");
    }
}

void CommunityCollection::normalize() {
    for (auto &c : communities) {
        std::sort(c.begin(), c.end());
        c.erase(std::unique(c.begin(), c.end()), c.end());
    }
}

void CommunityCollection::validate(std::size_t node_count) const {
    for (std::size_t k = 0; k < communities.size(); ++k) {
        if (communities[k].empty())
            throw ValidationError("community " + std::to_string(k) + " is empty");
        for (NodeId v : communities[k])
            if (v >= node_count)
                throw ValidationError("community " + std::to_string(k) + " names node " +
                                      std::to_string(v) + " outside the graph");
    }
}

std::vector<std::vector<std::size_t>>
CommunityCollection::membership_index(std::size_t node_count) const {
    std::vector<std::vector<std::size_t>> index(node_count);
    for (std::size_t k = 0; k < communities.size(); ++k)
        for (NodeId v : communities[k])
            if (index[v].empty() || index[v].back() != k)
                index[v].push_back(k);
    return index;
}

} // namespace tricomm
