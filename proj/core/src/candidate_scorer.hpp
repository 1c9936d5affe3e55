#pragma once

#include <span>
#include <vector>

#include "tricomm/local_search.hpp"

namespace tricomm::detail {

/// Evaluates node utilities against a frozen partition. One instance per
/// worker; the scratch arrays are sized to the graph and reset after each call.
///
/// With min_feature_edges >= 2 (or no features) every counted triple has an
/// edge to the anchor, so one enumeration of the anchor's local triples is
/// bucketed by community label and serves all candidates at once. Otherwise
/// each candidate falls back to the generic set-based formulas.
class CandidateScorer {
public:
    CandidateScorer(const AttributedGraph &graph, const TriangleOptions &options);

    /// out[j] = utility of v in community labels[j], v hypothetically joined.
    void score(const RoundSnapshot &snapshot, NodeId v, std::span<const Label> labels,
               std::span<double> out);

private:
    void score_local(const RoundSnapshot &snapshot, NodeId v, std::span<const Label> labels,
                     std::span<double> out);
    void score_generic(const RoundSnapshot &snapshot, NodeId v, std::span<const Label> labels,
                       std::span<double> out);
    double homogeneity_sum(const RoundSnapshot &snapshot, NodeId v, Label c) const;

    const AttributedGraph &graph_;
    TriangleOptions options_;
    bool local_;

    std::vector<std::uint64_t> tf_inside_;  // per label: triples with both ends in the community
    std::vector<std::uint64_t> tf_outside_; // per label: triples whose non-neighbour end is in it
    std::vector<std::uint32_t> vtf_outside_; // per label: non-neighbour participants in it
    std::vector<std::uint32_t> edges_to_;   // per label: neighbours of v in it
    std::vector<char> participant_;
    std::vector<Label> touched_labels_;
    std::vector<NodeId> participants_;
};

} // namespace tricomm::detail
