#include "tricomm/cli.hpp"

#include <CLI11.hpp>
#include <chrono>
#include <fstream>
#include <nlohmann/json.hpp>
#include <optional>
#include <ostream>

#include "tricomm/census.hpp"
#include "tricomm/errors.hpp"
#include "tricomm/evaluation.hpp"
#include "tricomm/graph_io.hpp"
#include "tricomm/local_search.hpp"
#include "tricomm/report_json.hpp"

namespace tricomm::cli {
namespace {

using json = nlohmann::json;
using Clock = std::chrono::steady_clock;

struct GraphInputs {
    std::string edges;
    std::string features;
    std::string feature_kind; // empty: sniffed from the file
};

void add_graph_options(CLI::App &cmd, GraphInputs &in, bool features_required) {
    cmd.add_option("--edges", in.edges, "edge list, one '<id> <id>' pair per line")
        ->required();
    auto *features = cmd.add_option("--features", in.features, "node feature file (dense or sparse rows)");
    if (features_required)
        features->required();
    cmd.add_option("--feature-kind", in.feature_kind, "binary or continuous (default: inferred)")
        ->check(CLI::IsMember({"binary", "continuous"}));
}

AttributedGraph load_graph(const GraphInputs &in) {
    AttributedGraph graph = load_edge_list(in.edges);
    if (in.features.empty())
        return graph;
    const FeatureKind kind =
        in.feature_kind.empty() ? sniff_feature_kind(in.features) : parse_feature_kind(in.feature_kind);
    return attach_features(graph, in.features, kind);
}

/// Every report carries the manifest of the run that produced it.
struct RunManifest {
    std::string command;
    json inputs = json::object();
    FeatureKind feature_kind = FeatureKind::None;
    json config = json::object();
    Clock::time_point started = Clock::now();

    json to_json() const {
        const std::chrono::duration<double> elapsed = Clock::now() - started;
        return json{{"command", command},
                    {"tool_version", TRICOMM_VERSION},
                    {"inputs", inputs},
                    {"feature_kind", std::string(to_string(feature_kind))},
                    {"config", config},
                    {"duration_seconds", elapsed.count()}};
    }
};

json graph_inputs_json(const GraphInputs &in) {
    json j{{"edges", in.edges}};
    if (!in.features.empty())
        j["features"] = in.features;
    return j;
}

void emit(const json &report, const std::string &path, std::ostream &out) {
    if (path.empty()) {
        out << report.dump(2) << '\n';
        return;
    }
    std::ofstream file(path);
    if (!file)
        throw Error("cannot open '" + path + "' for writing");
    file << report.dump(2) << '\n';
    if (!file)
        throw Error("failed writing '" + path + "'");
}

struct DetectArgs {
    GraphInputs graph;
    std::string mode = "partition";
    LsfConfig config;
    bool tf_union = false;
    bool skip_objective = false;
    std::string out;
    std::string trace;
    std::string report;
};

int cmd_detect(const DetectArgs &args, std::ostream &out) {
    RunManifest manifest{"detect"};
    LsfConfig config = args.config;
    config.mode = parse_detection_mode(args.mode);
    config.combine = args.tf_union ? TriangleCombine::Union : TriangleCombine::Sum;
    config.trace_objective = !args.skip_objective;
    config.validate();

    const AttributedGraph graph = load_graph(args.graph);
    manifest.inputs = graph_inputs_json(args.graph);
    manifest.feature_kind = graph.feature_kind();
    manifest.config = config;

    const LsfResult result = run(graph, config);
    save_communities(args.out, result.communities, graph);

    if (!args.trace.empty()) {
        std::ofstream trace(args.trace);
        if (!trace)
            throw Error("cannot open '" + args.trace + "' for writing");
        for (const auto &record : result.trace)
            trace << trace_line(record).dump() << '\n';
        if (!trace)
            throw Error("failed writing '" + args.trace + "'");
    }

    json report{{"communities", args.out},
                {"community_count", result.communities.size()},
                {"rounds", result.trace.size()},
                {"converged", result.converged}};
    if (!result.trace.empty()) {
        const auto &last = result.trace.back();
        report["modularity"] = last.modularity ? json(*last.modularity) : json(nullptr);
        report["objective"] = last.objective ? json(*last.objective) : json(nullptr);
    }
    if (!args.trace.empty())
        report["trace"] = args.trace;
    report["manifest"] = manifest.to_json();
    emit(report, args.report, out);
    return kOk;
}

struct EvalArgs {
    GraphInputs graph;
    std::string detected;
    std::string ground_truth;
    std::string out;
};

int cmd_eval(const EvalArgs &args, std::ostream &out) {
    RunManifest manifest{"eval"};
    const AttributedGraph graph = load_graph(args.graph);
    const auto detected = load_communities(args.detected, graph);
    const auto truth = load_communities(args.ground_truth, graph);
    manifest.inputs = graph_inputs_json(args.graph);
    manifest.inputs["detected"] = args.detected;
    manifest.inputs["ground_truth"] = args.ground_truth;
    manifest.feature_kind = graph.feature_kind();

    json report = evaluate(graph, detected, truth);
    report["manifest"] = manifest.to_json();
    emit(report, args.out, out);
    return kOk;
}

struct StatsArgs {
    GraphInputs graph;
    std::string ground_truth;
    int min_feature_edges = 0;
    std::string out;
};

int cmd_stats(const StatsArgs &args, std::ostream &out) {
    RunManifest manifest{"stats"};
    const AttributedGraph graph = load_graph(args.graph);
    const auto truth = load_communities(args.ground_truth, graph);
    manifest.inputs = graph_inputs_json(args.graph);
    manifest.inputs["ground_truth"] = args.ground_truth;
    manifest.feature_kind = graph.feature_kind();
    manifest.config = json{{"min_feature_edges", args.min_feature_edges}};

    json report = census(graph, truth, args.min_feature_edges);
    report["manifest"] = manifest.to_json();
    emit(report, args.out, out);
    return kOk;
}

} // namespace

int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err) {
    CLI::App app{"Triangle-based community detection in attributed networks", "tricomm"};
    app.set_version_flag("--version", TRICOMM_VERSION);
    app.require_subcommand(1);

    DetectArgs detect;
    auto *detect_cmd = app.add_subcommand("detect", "run the local search and write communities");
    add_graph_options(*detect_cmd, detect.graph, false);
    detect_cmd->add_option("--mode", detect.mode, "partition or overlap")
        ->check(CLI::IsMember({"partition", "overlap"}))
        ->capture_default_str();
    detect_cmd->add_option("--alpha", detect.config.alpha, "weight of the newest utility gain")
        ->check(CLI::Range(0.0, 1.0))
        ->capture_default_str();
    detect_cmd->add_option("--max-rounds", detect.config.max_rounds, "round cap")
        ->check(CLI::Range(1, 1 << 30))
        ->capture_default_str();
    detect_cmd->add_option("--min-feature-edges", detect.config.min_feature_edges,
                           "edges a feature triangle needs to count")
        ->check(CLI::Range(0, 3))
        ->capture_default_str();
    detect_cmd->add_flag("--tf-union", detect.tf_union, "count a triple that is both kinds of triangle once");
    detect_cmd->add_option("--workers", detect.config.workers, "threads per round")
        ->check(CLI::Range(1U, 1024U))
        ->capture_default_str();
    detect_cmd->add_flag("--skip-objective", detect.skip_objective, "leave the objective out of the trace");
    detect_cmd->add_option("--out", detect.out, "community file to write")->required();
    detect_cmd->add_option("--trace", detect.trace, "per-round JSON lines trace to write");
    detect_cmd->add_option("--report", detect.report, "write the run report here instead of stdout");

    EvalArgs eval;
    auto *eval_cmd = app.add_subcommand("eval", "score detected communities against a ground truth");
    add_graph_options(*eval_cmd, eval.graph, false);
    eval_cmd->add_option("--detected", eval.detected, "detected community file")
        ->required();
    eval_cmd->add_option("--ground-truth", eval.ground_truth, "ground-truth community file")
        ->required();
    eval_cmd->add_option("--out", eval.out, "write the report here instead of stdout");

    StatsArgs stats;
    auto *stats_cmd = app.add_subcommand("stats", "triangle census against a ground truth");
    add_graph_options(*stats_cmd, stats.graph, true);
    stats_cmd->add_option("--ground-truth", stats.ground_truth, "ground-truth community file")
        ->required();
    stats_cmd->add_option("--min-feature-edges", stats.min_feature_edges,
                          "edges a feature triangle needs to count")
        ->check(CLI::Range(0, 3))
        ->capture_default_str();
    stats_cmd->add_option("--out", stats.out, "write the report here instead of stdout");

    try {
        // CLI11 consumes the vector from the back
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError &e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kOk : kUsage;
    }

    try {
        if (*detect_cmd)
            return cmd_detect(detect, out);
        if (*eval_cmd)
            return cmd_eval(eval, out);
        return cmd_stats(stats, out);
    } catch (const std::exception &e) {
        err << "tricomm: " << e.what() << '\n';
        return kFailure;
    }
}

} // namespace tricomm::cli
