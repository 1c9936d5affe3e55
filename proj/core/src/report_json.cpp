#include "tricomm/report_json.hpp"

namespace tricomm {
namespace {

template <class T>
nlohmann::json or_null(const std::optional<T> &value) {
    return value ? nlohmann::json(*value) : nlohmann::json(nullptr);
}

} // namespace

void to_json(nlohmann::json &j, const CensusReport &report) {
    j = nlohmann::json{
        {"min_feature_edges", report.min_feature_edges},
        {"topo_in_groundtruth", report.topo_in_groundtruth},
        {"topo_same_community", report.topo_same_community},
        {"feat_in_groundtruth", report.feat_in_groundtruth},
        {"feat_same_community", report.feat_same_community},
        {"feat_edge_breakdown", report.feat_edge_breakdown},
    };
}

void to_json(nlohmann::json &j, const MetricsReport &report) {
    j = nlohmann::json{
        {"avg_f1", report.avg_f1},
        {"modularity_q", or_null(report.modularity_q)},
        {"density_per_community", report.density_per_community},
        {"density_weighted_mean", report.density_weighted_mean},
        {"community_count", report.community_count},
        {"overlaps", report.overlaps},
    };
    if (report.entropy_per_community) {
        j["entropy_per_community"] = *report.entropy_per_community;
        j["entropy_total"] = or_null(report.entropy_total);
    }
}

void to_json(nlohmann::json &j, const LsfConfig &config) {
    j = nlohmann::json{
        {"alpha", config.alpha},
        {"max_rounds", config.max_rounds},
        {"mode", to_string(config.mode)},
        {"min_feature_edges", config.min_feature_edges},
        {"tf_combine", config.combine == TriangleCombine::Sum ? "sum" : "union"},
        {"workers", config.workers},
    };
}

nlohmann::json trace_line(const RoundRecord &record) {
    return nlohmann::json{
        {"round", record.round},
        {"changed_count", record.changed_count},
        {"modularity", or_null(record.modularity)},
        {"objective", or_null(record.objective)},
    };
}

} // namespace tricomm
