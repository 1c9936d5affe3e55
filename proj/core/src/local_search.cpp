#include "tricomm/local_search.hpp"

#include <algorithm>
#include <string>
#include <thread>

#include "candidate_scorer.hpp"
#include "tricomm/errors.hpp"
#include "tricomm/evaluation.hpp"
#include "tricomm/quality.hpp"

namespace tricomm {

std::string_view to_string(DetectionMode mode) {
    return mode == DetectionMode::Overlap ? "overlap" : "partition";
}

DetectionMode parse_detection_mode(std::string_view text) {
    if (text == "partition")
        return DetectionMode::Partition;
    if (text == "overlap")
        return DetectionMode::Overlap;
    throw ValidationError("unknown detection mode '" + std::string(text) + "'");
}

void LsfConfig::validate() const {
    if (!(alpha >= 0.0 && alpha <= 1.0))
        throw ValidationError("alpha must be in [0, 1], got " + std::to_string(alpha));
    if (max_rounds < 1)
        throw ValidationError("max_rounds must be at least 1, got " + std::to_string(max_rounds));
    if (workers == 0)
        throw ValidationError("workers must be at least 1");
    tricomm::validate(triangle_options());
}

std::optional<double> ledger_value(const LedgerRow &row, Label label) {
    auto it = std::lower_bound(row.begin(), row.end(), label,
                               [](const LedgerEntry &e, Label l) { return e.label < l; });
    if (it == row.end() || it->label != label)
        return std::nullopt;
    return it->value;
}

void ledger_set(LedgerRow &row, Label label, double value) {
    auto it = std::lower_bound(row.begin(), row.end(), label,
                               [](const LedgerEntry &e, Label l) { return e.label < l; });
    if (it != row.end() && it->label == label)
        it->value = value;
    else
        row.insert(it, LedgerEntry{label, value});
}

RoundSnapshot::RoundSnapshot(const CommunityState &state)
    : labels_(state.primary_label), offsets_(state.node_count() + 1, 0) {
    const std::size_t n = labels_.size();
    for (Label k : labels_)
        ++offsets_[k + 1];
    for (std::size_t k = 0; k < n; ++k) {
        if (offsets_[k + 1] > 0)
            ++live_;
        offsets_[k + 1] += offsets_[k];
    }
    members_.resize(n);
    std::vector<std::size_t> cursor(offsets_.begin(), offsets_.end() - 1);
    for (NodeId v = 0; v < n; ++v)
        members_[cursor[labels_[v]]++] = v;
}

CommunityState initialize(const AttributedGraph &graph) {
    const std::size_t n = graph.node_count();
    CommunityState state;
    state.primary_label.resize(n);
    state.memberships.resize(n);
    state.ledger.resize(n);
    for (NodeId v = 0; v < n; ++v) {
        state.primary_label[v] = v;
        state.memberships[v] = {v};
        state.ledger[v] = {LedgerEntry{v, 0.0}};
    }
    return state;
}

std::vector<Label> candidate_labels(const AttributedGraph &graph, const RoundSnapshot &snapshot,
                                    NodeId v) {
    std::vector<Label> out;
    const Label own = snapshot.label(v);
    for (NodeId u : graph.neighbors(v))
        if (snapshot.label(u) != own)
            out.push_back(snapshot.label(u));
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

double candidate_utility(const AttributedGraph &graph, const RoundSnapshot &snapshot, NodeId v,
                         Label label, const TriangleOptions &options) {
    detail::CandidateScorer scorer(graph, options);
    double out = 0.0;
    scorer.score(snapshot, v, std::span<const Label>(&label, 1), std::span<double>(&out, 1));
    return out;
}

namespace {

struct NodeStep {
    std::vector<ScoredLabel> updated;
    Assignment assignment;
};

double current_value(const CommunityState &state, NodeId v) {
    // initialize() and every commit keep an entry for the primary label
    return ledger_value(state.ledger[v], state.primary_label[v]).value_or(0.0);
}

std::vector<ScoredLabel> cumulative_update(detail::CandidateScorer &scorer, const AttributedGraph &graph,
                                           const RoundSnapshot &snapshot, const CommunityState &state,
                                           NodeId v, double alpha, std::vector<Label> &labels,
                                           std::vector<double> &utilities) {
    labels = candidate_labels(graph, snapshot, v);
    if (labels.empty())
        return {};
    labels.push_back(snapshot.label(v));
    utilities.resize(labels.size());
    scorer.score(snapshot, v, labels, utilities);
    const double own_utility = utilities.back();
    const double history = current_value(state, v);
    std::vector<ScoredLabel> out;
    out.reserve(labels.size() - 1);
    for (std::size_t j = 0; j + 1 < labels.size(); ++j) {
        const double gain = utilities[j] - own_utility;
        out.push_back({labels[j], alpha * gain + (1.0 - alpha) * history});
    }
    return out;
}

template <class Fn>
void parallel_for(std::size_t count, unsigned workers, Fn &&fn) {
    workers = static_cast<unsigned>(std::min<std::size_t>(workers, std::max<std::size_t>(count, 1)));
    if (workers <= 1) {
        fn(0U, std::size_t{0}, count);
        return;
    }
    std::vector<std::jthread> threads;
    threads.reserve(workers);
    const std::size_t chunk = (count + workers - 1) / workers;
    for (unsigned w = 0; w < workers; ++w) {
        const std::size_t begin = std::min(count, w * chunk);
        const std::size_t end = std::min(count, begin + chunk);
        threads.emplace_back([&fn, w, begin, end] { fn(w, begin, end); });
    }
}

} // namespace

std::vector<ScoredLabel> update_cumulative_utilities(const AttributedGraph &graph,
                                                     const RoundSnapshot &snapshot,
                                                     const CommunityState &state, NodeId v,
                                                     const LsfConfig &config) {
    config.validate();
    detail::CandidateScorer scorer(graph, config.triangle_options());
    std::vector<Label> labels;
    std::vector<double> utilities;
    return cumulative_update(scorer, graph, snapshot, state, v, config.alpha, labels, utilities);
}

std::vector<ScoredLabel> filter_candidates(const CommunityState &state, NodeId v,
                                           std::span<const ScoredLabel> updated) {
    const Label own = state.primary_label[v];
    const double history = current_value(state, v);
    std::vector<ScoredLabel> out;
    for (const auto &candidate : updated)
        if (candidate.label != own && candidate.cumulative >= history)
            out.push_back(candidate);
    out.push_back({own, history});
    std::sort(out.begin(), out.end(), [](const ScoredLabel &a, const ScoredLabel &b) {
        if (a.cumulative != b.cumulative)
            return a.cumulative > b.cumulative;
        return a.label < b.label;
    });
    return out;
}

Assignment assign_labels(std::span<const ScoredLabel> ordered, DetectionMode mode) {
    Assignment out{ordered.front().label, {}};
    if (mode == DetectionMode::Partition) {
        out.memberships = {out.primary};
        return out;
    }
    const std::size_t keep = ordered.size() >= 2 ? ordered.size() - 1 : ordered.size();
    for (std::size_t j = 0; j < keep; ++j)
        out.memberships.push_back(ordered[j].label);
    std::sort(out.memberships.begin(), out.memberships.end());
    return out;
}

CommunityCollection communities_of(const CommunityState &state, DetectionMode mode) {
    const std::size_t n = state.node_count();
    std::vector<std::vector<NodeId>> by_label(n);
    for (NodeId v = 0; v < n; ++v) {
        if (mode == DetectionMode::Partition) {
            by_label[state.primary_label[v]].push_back(v);
        } else {
            for (Label k : state.memberships[v])
                by_label[k].push_back(v);
        }
    }
    CommunityCollection out;
    for (auto &members : by_label)
        if (!members.empty())
            out.communities.push_back(std::move(members));
    return out;
}

LsfResult run(const AttributedGraph &graph, const LsfConfig &config) {
    config.validate();
    const std::size_t n = graph.node_count();
    const TriangleOptions options = config.triangle_options();

    LsfResult result;
    result.state = initialize(graph);
    if (n == 0) {
        result.converged = true;
        return result;
    }

    CommunityState &state = result.state;
    const unsigned workers = std::max(1U, config.workers);
    std::vector<detail::CandidateScorer> scorers;
    for (unsigned w = 0; w < workers; ++w)
        scorers.emplace_back(graph, options);
    std::vector<NodeStep> steps(n);

    while (true) {
        const RoundSnapshot snapshot(state);
        parallel_for(n, workers, [&](unsigned worker, std::size_t begin, std::size_t end) {
            std::vector<Label> labels;
            std::vector<double> utilities;
            for (std::size_t i = begin; i < end; ++i) {
                const auto v = static_cast<NodeId>(i);
                NodeStep &step = steps[v];
                step.updated = cumulative_update(scorers[worker], graph, snapshot, state, v,
                                                 config.alpha, labels, utilities);
                const auto ordered = filter_candidates(state, v, step.updated);
                step.assignment = assign_labels(ordered, config.mode);
            }
        });

        // commit: every node moves together
        std::size_t changed = 0;
        for (NodeId v = 0; v < n; ++v) {
            NodeStep &step = steps[v];
            for (const auto &entry : step.updated)
                ledger_set(state.ledger[v], entry.label, entry.cumulative);
            if (step.assignment.primary != state.primary_label[v])
                ++changed;
            state.primary_label[v] = step.assignment.primary;
            state.memberships[v] = std::move(step.assignment.memberships);
        }
        ++state.round;
        state.changed_count = changed;

        RoundRecord record;
        record.round = state.round;
        record.changed_count = changed;
        const auto communities = communities_of(state, config.mode);
        if (graph.edge_count() > 0)
            record.modularity = modularity(graph, communities);
        if (config.trace_objective) {
            if (config.mode == DetectionMode::Partition) {
                // every node sits in its own primary community, which the scorers handle directly
                const RoundSnapshot next(state);
                std::vector<double> terms(n);
                parallel_for(n, workers, [&](unsigned worker, std::size_t begin, std::size_t end) {
                    for (std::size_t i = begin; i < end; ++i) {
                        const auto v = static_cast<NodeId>(i);
                        const Label own = next.label(v);
                        scorers[worker].score(next, v, std::span<const Label>(&own, 1),
                                              std::span<double>(&terms[i], 1));
                    }
                });
                double total = 0.0;
                for (double t : terms)
                    total += t;
                record.objective = total;
            } else {
                record.objective = objective(graph, communities, options);
            }
        }
        if (config.record_ledger) {
            record.labels = state.primary_label;
            record.ledger = state.ledger;
        }
        result.trace.push_back(std::move(record));

        if (changed == 0) {
            result.converged = true;
            break;
        }
        if (state.round > config.max_rounds)
            break;
    }
    result.communities = communities_of(state, config.mode);
    return result;
}

} // namespace tricomm
