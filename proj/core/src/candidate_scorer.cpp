#include "candidate_scorer.hpp"

#include <algorithm>

#include "local_triples.hpp"
#include "tricomm/node_set.hpp"
#include "tricomm/quality.hpp"

namespace tricomm::detail {

CandidateScorer::CandidateScorer(const AttributedGraph &graph, const TriangleOptions &options)
    : graph_(graph), options_(options),
      local_(!graph.has_features() || options.min_feature_edges >= 2) {
    validate(options_);
    const std::size_t n = graph.node_count();
    if (local_) {
        tf_inside_.assign(n, 0);
        tf_outside_.assign(n, 0);
        vtf_outside_.assign(n, 0);
        participant_.assign(n, 0);
    }
    edges_to_.assign(n, 0);
}

void CandidateScorer::score(const RoundSnapshot &snapshot, NodeId v, std::span<const Label> labels,
                            std::span<double> out) {
    if (local_)
        score_local(snapshot, v, labels, out);
    else
        score_generic(snapshot, v, labels, out);
}

double CandidateScorer::homogeneity_sum(const RoundSnapshot &snapshot, NodeId v, Label c) const {
    double sum = 0.0;
    for (NodeId u : snapshot.members(c))
        if (u != v)
            sum += feature_distance(graph_, v, u);
    return sum;
}

void CandidateScorer::score_local(const RoundSnapshot &snapshot, NodeId v,
                                  std::span<const Label> labels, std::span<double> out) {
    const bool sum = options_.combine == TriangleCombine::Sum;
    std::uint64_t tf_around = 0;
    participants_.clear();
    auto mark = [&](NodeId u) {
        if (!participant_[u]) {
            participant_[u] = 1;
            participants_.push_back(u);
        }
    };

    for_each_local_triple(graph_, v, options_.min_feature_edges,
                          [&](NodeId x, NodeId y, bool y_is_neighbor, bool topo, bool feat) {
                              const std::uint64_t w = triple_weight(topo, feat, sum);
                              if (w == 0)
                                  return;
                              const Label lx = snapshot.label(x);
                              const Label ly = snapshot.label(y);
                              if (lx == ly)
                                  tf_inside_[lx] += w;
                              if (y_is_neighbor)
                                  tf_around += w;
                              else
                                  tf_outside_[ly] += w;
                              mark(x);
                              mark(y);
                          });

    const auto around = graph_.neighbors(v);
    std::uint32_t vtf_around = 0;
    for (NodeId u : participants_) {
        if (std::binary_search(around.begin(), around.end(), u))
            ++vtf_around;
        else
            ++vtf_outside_[snapshot.label(u)];
    }
    for (NodeId u : around)
        ++edges_to_[snapshot.label(u)];

    const Label own = snapshot.label(v);
    const auto degree = static_cast<double>(graph_.degree(v));
    const auto dim = static_cast<double>(graph_.feature_dim());
    for (std::size_t j = 0; j < labels.size(); ++j) {
        const Label c = labels[j];
        const std::size_t joined = snapshot.size(c) + (c == own ? 0 : 1);
        const auto others = static_cast<double>(joined - 1);

        double wcc = 0.0;
        const std::uint64_t tf_reference = tf_around + tf_outside_[c];
        if (tf_reference != 0) {
            const double den = others + vtf_around;
            if (den > 0.0)
                wcc = (static_cast<double>(tf_inside_[c]) / static_cast<double>(tf_reference)) *
                      (static_cast<double>(vtf_around + vtf_outside_[c]) / den);
        }
        const double tight = degree == 0.0 ? 0.0 : edges_to_[c] / (degree * static_cast<double>(joined));
        const double homog = graph_.has_features()
                                 ? homogeneity_sum(snapshot, v, c) / (dim * static_cast<double>(joined))
                                 : 0.0;
        out[j] = wcc + tight - homog;
    }

    // reset scratch; every touched slot is the label of a participant or a neighbour
    for (NodeId u : participants_) {
        participant_[u] = 0;
        tf_inside_[snapshot.label(u)] = 0;
        tf_outside_[snapshot.label(u)] = 0;
        vtf_outside_[snapshot.label(u)] = 0;
    }
    for (NodeId u : around)
        edges_to_[snapshot.label(u)] = 0;
}

void CandidateScorer::score_generic(const RoundSnapshot &snapshot, NodeId v,
                                    std::span<const Label> labels, std::span<double> out) {
    for (std::size_t j = 0; j < labels.size(); ++j) {
        const auto members = snapshot.members(labels[j]);
        const NodeSet community(std::vector<NodeId>(members.begin(), members.end()));
        out[j] = node_utility(graph_, v, community, options_).utility;
    }
}

} // namespace tricomm::detail
