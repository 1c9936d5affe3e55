#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

namespace tricomm {

using NodeId = std::uint32_t;
using OriginalId = std::int64_t;
using Edge = std::pair<NodeId, NodeId>;

enum class FeatureKind { None, Binary, Continuous };

std::string_view to_string(FeatureKind kind);
/// Accepts "none", "binary", "continuous". Throws ValidationError otherwise.
FeatureKind parse_feature_kind(std::string_view text);

/**
 * Immutable undirected simple graph with an optional dense node-feature matrix.
 *
 * Nodes are compact ids 0..n-1. Each compact id remembers the id it had in the
 * input files so results can be written back in the original numbering.
 *
 * Every node also carries a feature signature: a bitset over the feature
 * dimensions that decides closed feature triangles. For binary features it is
 * the row itself; for continuous features it holds the single argmax
 * dimension (lowest index on ties) when that maximum is positive, and is
 * empty otherwise. Three nodes form a feature triangle iff their signatures
 * intersect.
 */
class AttributedGraph {
public:
    AttributedGraph() = default;

    /// Builds the topology. Self-loops are dropped and duplicate edges collapsed.
    /// `original_ids` defaults to the identity mapping; otherwise it must have
    /// `node_count` distinct entries.
    AttributedGraph(std::size_t node_count, std::span<const Edge> edges,
                    std::vector<OriginalId> original_ids = {});

    /// Returns a copy carrying the given row-major n x dim feature matrix.
    /// Throws ValidationError when the values do not fit `kind`.
    AttributedGraph with_features(FeatureKind kind, std::size_t dim,
                                  std::vector<double> rows) const;

    std::size_t node_count() const noexcept { return offsets_.empty() ? 0 : offsets_.size() - 1; }
    std::size_t edge_count() const noexcept { return adjacency_.size() / 2; }

    std::span<const NodeId> neighbors(NodeId v) const noexcept {
        return {adjacency_.data() + offsets_[v], adjacency_.data() + offsets_[v + 1]};
    }
    std::size_t degree(NodeId v) const noexcept { return offsets_[v + 1] - offsets_[v]; }
    std::size_t max_degree() const noexcept { return max_degree_; }
    bool has_edge(NodeId u, NodeId v) const noexcept;

    /// Every edge once, as (u, v) with u < v, in ascending order.
    std::vector<Edge> edges() const;

    FeatureKind feature_kind() const noexcept { return kind_; }
    bool has_features() const noexcept { return kind_ != FeatureKind::None && dim_ > 0; }
    std::size_t feature_dim() const noexcept { return dim_; }
    std::span<const double> features(NodeId v) const noexcept {
        return {features_.data() + v * dim_, dim_};
    }

    std::size_t signature_words() const noexcept { return sig_words_; }
    std::span<const std::uint64_t> signature(NodeId v) const noexcept {
        return {signatures_.data() + v * sig_words_, sig_words_};
    }
    /// Number of nodes whose signature contains dimension `l`.
    std::size_t signature_support(std::size_t l) const noexcept { return support_[l]; }
    bool signatures_intersect(NodeId x, NodeId y) const noexcept;
    bool signatures_intersect(NodeId x, NodeId y, NodeId z) const noexcept;

    OriginalId original_id(NodeId v) const noexcept { return original_ids_[v]; }
    std::span<const OriginalId> original_ids() const noexcept { return original_ids_; }
    std::optional<NodeId> compact_id(OriginalId id) const;

    /// Re-checks symmetry, simplicity, degree sum and feature-kind constraints.
    /// Throws ValidationError on the first violation.
    void check_invariants() const;

private:
    void build_signatures();

    std::vector<std::size_t> offsets_;
    std::vector<NodeId> adjacency_;
    std::size_t max_degree_ = 0;
    std::vector<OriginalId> original_ids_;
    std::unordered_map<OriginalId, NodeId> id_index_;

    FeatureKind kind_ = FeatureKind::None;
    std::size_t dim_ = 0;
    std::vector<double> features_;
    std::size_t sig_words_ = 0;
    std::vector<std::uint64_t> signatures_;
    std::vector<std::size_t> support_;
};

/// Non-empty node sets C_1..C_K. Used for detected communities and ground truths alike.
struct CommunityCollection {
    std::vector<std::vector<NodeId>> communities;

    std::size_t size() const noexcept { return communities.size(); }
    bool empty() const noexcept { return communities.empty(); }

    /// Sorts and de-duplicates every community in place.
    void normalize();
    /// Throws ValidationError when a community is empty or names a node >= node_count.
    void validate(std::size_t node_count) const;

    /// For every node, the indices of the communities containing it (ascending).
    std::vector<std::vector<std::size_t>> membership_index(std::size_t node_count) const;

    bool operator==(const CommunityCollection &) const = default;
};

} // namespace tricomm
