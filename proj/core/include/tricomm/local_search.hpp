#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "tricomm/attributed_graph.hpp"
#include "tricomm/triangles.hpp"

namespace tricomm {

enum class DetectionMode { Partition, Overlap };

std::string_view to_string(DetectionMode mode);
DetectionMode parse_detection_mode(std::string_view text);

struct LsfConfig {
    double alpha = 0.2;   ///< weight of the current utility gain in the cumulative utility
    int max_rounds = 20;  ///< the search stops once the round counter exceeds this
    DetectionMode mode = DetectionMode::Partition;
    int min_feature_edges = kDefaultMinFeatureEdges;
    TriangleCombine combine = TriangleCombine::Sum;
    unsigned workers = 1; ///< threads evaluating nodes within a round; output does not depend on it
    bool record_ledger = false;
    bool trace_objective = true;

    TriangleOptions triangle_options() const { return {min_feature_edges, combine}; }
    /// Throws ValidationError for alpha outside [0,1], max_rounds < 1, bad min_feature_edges or 0 workers.
    void validate() const;
};

using Label = NodeId;

struct LedgerEntry {
    Label label;
    double value;
    bool operator==(const LedgerEntry &) const = default;
};
/// One node's cumulative utilities, sorted by label.
using LedgerRow = std::vector<LedgerEntry>;

std::optional<double> ledger_value(const LedgerRow &row, Label label);
void ledger_set(LedgerRow &row, Label label, double value);

struct CommunityState {
    std::vector<Label> primary_label;
    std::vector<std::vector<Label>> memberships; ///< sorted by label
    std::vector<LedgerRow> ledger;
    int round = 0;
    std::size_t changed_count = 0;

    std::size_t node_count() const noexcept { return primary_label.size(); }
};

/// Members of every live community of a state's primary labels, frozen for one round.
class RoundSnapshot {
public:
    explicit RoundSnapshot(const CommunityState &state);

    Label label(NodeId v) const noexcept { return labels_[v]; }
    std::span<const Label> labels() const noexcept { return labels_; }
    std::span<const NodeId> members(Label k) const noexcept {
        return {members_.data() + offsets_[k], members_.data() + offsets_[k + 1]};
    }
    std::size_t size(Label k) const noexcept { return offsets_[k + 1] - offsets_[k]; }
    std::size_t community_count() const noexcept { return live_; }

private:
    std::vector<Label> labels_;
    std::vector<std::size_t> offsets_;
    std::vector<NodeId> members_;
    std::size_t live_ = 0;
};

/// One singleton community per node (label = node id), all cumulative utilities zero.
CommunityState initialize(const AttributedGraph &graph);

/// Labels of the communities holding at least one neighbour of v, except v's own, ascending.
std::vector<Label> candidate_labels(const AttributedGraph &graph, const RoundSnapshot &snapshot,
                                    NodeId v);

struct ScoredLabel {
    Label label;
    double cumulative;
    bool operator==(const ScoredLabel &) const = default;
};

/// Utility of v in the community `label` of the snapshot, with v hypothetically joined.
double candidate_utility(const AttributedGraph &graph, const RoundSnapshot &snapshot, NodeId v,
                         Label label, const TriangleOptions &options);

/// New cumulative utility of v for every candidate label (ascending by label).
std::vector<ScoredLabel> update_cumulative_utilities(const AttributedGraph &graph,
                                                     const RoundSnapshot &snapshot,
                                                     const CommunityState &state, NodeId v,
                                                     const LsfConfig &config);

/// Candidates whose new cumulative utility is at least v's current one, plus
/// the current label with its current value; descending by value, ties by label.
std::vector<ScoredLabel> filter_candidates(const CommunityState &state, NodeId v,
                                           std::span<const ScoredLabel> updated);

struct Assignment {
    Label primary;
    std::vector<Label> memberships; ///< sorted by label
};

/// Drops the lowest-ranked label when more than one remains; the head becomes primary.
Assignment assign_labels(std::span<const ScoredLabel> ordered, DetectionMode mode);

/// Communities of the state: by primary label (Partition) or by membership (Overlap),
/// ordered by label, members ascending.
CommunityCollection communities_of(const CommunityState &state, DetectionMode mode);

struct RoundRecord {
    int round = 0;
    std::size_t changed_count = 0;
    std::optional<double> modularity; ///< empty when the graph has no edges
    std::optional<double> objective;
    std::vector<Label> labels;        ///< recorded with LsfConfig::record_ledger
    std::vector<LedgerRow> ledger;    ///< recorded with LsfConfig::record_ledger
};

struct LsfResult {
    CommunityCollection communities;
    std::vector<RoundRecord> trace;
    CommunityState state;
    bool converged = false; ///< stopped because no primary label changed
};

LsfResult run(const AttributedGraph &graph, const LsfConfig &config = {});

} // namespace tricomm
