#include "tricomm/graph_io.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <istream>
#include <map>
#include <ostream>
#include <string_view>
#include <vector>

#include "tricomm/errors.hpp"

namespace tricomm {
namespace {

std::ifstream open_input(const std::filesystem::path &path) {
    std::ifstream in(path);
    if (!in)
        throw Error("cannot open '" + path.string() + "' for reading");
    return in;
}

std::vector<std::string_view> tokenize(std::string_view line) {
    std::vector<std::string_view> tokens;
    std::size_t pos = 0;
    while (pos < line.size()) {
        while (pos < line.size() && (line[pos] == ' ' || line[pos] == '\t' || line[pos] == '\r'))
            ++pos;
        std::size_t end = pos;
        while (end < line.size() && line[end] != ' ' && line[end] != '\t' && line[end] != '\r')
            ++end;
        if (end > pos)
            tokens.push_back(line.substr(pos, end - pos));
        pos = end;
    }
    return tokens;
}

bool is_skippable(const std::vector<std::string_view> &tokens) {
    return tokens.empty() || tokens.front().front() == '#';
}

OriginalId parse_id(std::string_view token, const std::string &source, std::size_t line) {
    OriginalId value = 0;
    auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (ec != std::errc{} || ptr != token.data() + token.size())
        throw ParseError(source, line, "expected an integer node id, got '" + std::string(token) + "'");
    return value;
}

double parse_value(std::string_view token, const std::string &source, std::size_t line) {
    // from_chars for double is missing on older libstdc++; stod is fine here
    try {
        std::size_t used = 0;
        const double value = std::stod(std::string(token), &used);
        if (used == token.size())
            return value;
    } catch (const std::exception &) {
    }
    throw ParseError(source, line, "expected a number, got '" + std::string(token) + "'");
}

} // namespace

AttributedGraph read_edge_list(std::istream &in, const std::string &source) {
    std::vector<std::pair<OriginalId, OriginalId>> raw;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        auto tokens = tokenize(line);
        if (is_skippable(tokens))
            continue;
        if (tokens.size() != 2)
            throw ParseError(source, line_no,
                             "expected two node ids, got " + std::to_string(tokens.size()) + " tokens");
        raw.emplace_back(parse_id(tokens[0], source, line_no), parse_id(tokens[1], source, line_no));
    }

    std::vector<OriginalId> ids;
    ids.reserve(raw.size() * 2);
    for (auto [a, b] : raw) {
        ids.push_back(a);
        ids.push_back(b);
    }
    std::sort(ids.begin(), ids.end());
    ids.erase(std::unique(ids.begin(), ids.end()), ids.end());

    auto compact = [&ids](OriginalId id) {
        return static_cast<NodeId>(std::lower_bound(ids.begin(), ids.end(), id) - ids.begin());
    };
    std::vector<Edge> edges;
    edges.reserve(raw.size());
    for (auto [a, b] : raw)
        edges.emplace_back(compact(a), compact(b));

    const std::size_t n = ids.size();
    AttributedGraph graph(n, edges, std::move(ids));
    graph.check_invariants();
    return graph;
}

AttributedGraph load_edge_list(const std::filesystem::path &path) {
    auto in = open_input(path);
    return read_edge_list(in, path.string());
}

AttributedGraph read_features(const AttributedGraph &graph, std::istream &in, FeatureKind kind,
                              const std::string &source) {
    struct Row {
        std::size_t line;
        std::vector<std::pair<std::size_t, double>> entries;
    };
    std::map<OriginalId, Row> rows;
    std::size_t dim = 0;
    std::optional<std::size_t> dense_width;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        auto tokens = tokenize(line);
        if (is_skippable(tokens))
            continue;
        const OriginalId id = parse_id(tokens[0], source, line_no);
        Row row{line_no, {}};
        const bool sparse = tokens.size() > 1 && tokens[1].find(':') != std::string_view::npos;
        if (sparse) {
            for (std::size_t t = 1; t < tokens.size(); ++t) {
                const auto colon = tokens[t].find(':');
                if (colon == std::string_view::npos)
                    throw ParseError(source, line_no, "sparse entry '" + std::string(tokens[t]) +
                                                          "' is not of the form dim:value");
                const OriginalId l = parse_id(tokens[t].substr(0, colon), source, line_no);
                if (l < 0)
                    throw ParseError(source, line_no, "negative feature dimension");
                const double value = parse_value(tokens[t].substr(colon + 1), source, line_no);
                row.entries.emplace_back(static_cast<std::size_t>(l), value);
                dim = std::max(dim, static_cast<std::size_t>(l) + 1);
            }
        } else {
            const std::size_t width = tokens.size() - 1;
            if (dense_width && *dense_width != width)
                throw ParseError(source, line_no,
                                 "dense row has " + std::to_string(width) + " values, expected " +
                                     std::to_string(*dense_width));
            dense_width = width;
            for (std::size_t t = 1; t < tokens.size(); ++t)
                row.entries.emplace_back(t - 1, parse_value(tokens[t], source, line_no));
            dim = std::max(dim, width);
        }
        for (auto [l, value] : row.entries) {
            if (kind == FeatureKind::Binary && value != 0.0 && value != 1.0)
                throw ValidationError(source + ":" + std::to_string(line_no) + ": binary feature value " +
                                      std::string(tokens[0]) + "/" + std::to_string(l) + " = " +
                                      std::to_string(value) + " is not 0 or 1");
            if (kind == FeatureKind::Continuous && value < 0.0)
                throw ValidationError(source + ":" + std::to_string(line_no) +
                                      ": continuous feature value must be non-negative");
        }
        auto [it, inserted] = rows.emplace(id, std::move(row));
        if (!inserted)
            throw ParseError(source, line_no, "duplicate feature row for node " + std::to_string(id));
    }

    // nodes that only appear in the feature file become isolated nodes
    std::vector<OriginalId> ids(graph.original_ids().begin(), graph.original_ids().end());
    for (const auto &[id, row] : rows)
        if (!graph.compact_id(id))
            ids.push_back(id);
    const std::size_t n = ids.size();
    auto edges = graph.edges();
    AttributedGraph extended = n == graph.node_count() ? graph : AttributedGraph(n, edges, ids);

    std::vector<double> matrix(n * dim, 0.0);
    for (const auto &[id, row] : rows) {
        const NodeId v = *extended.compact_id(id);
        for (auto [l, value] : row.entries)
            matrix[v * dim + l] = value;
    }
    return extended.with_features(kind, dim, std::move(matrix));
}

AttributedGraph attach_features(const AttributedGraph &graph, const std::filesystem::path &path,
                                FeatureKind kind) {
    auto in = open_input(path);
    return read_features(graph, in, kind, path.string());
}

FeatureKind sniff_feature_kind(const std::filesystem::path &path) {
    auto in = open_input(path);
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        auto tokens = tokenize(line);
        if (is_skippable(tokens))
            continue;
        for (std::size_t t = 1; t < tokens.size(); ++t) {
            auto token = tokens[t];
            if (auto colon = token.find(':'); colon != std::string_view::npos)
                token = token.substr(colon + 1);
            const double value = parse_value(token, path.string(), line_no);
            if (value != 0.0 && value != 1.0)
                return FeatureKind::Continuous;
        }
    }
    return FeatureKind::Binary;
}

CommunityCollection read_communities(std::istream &in, const AttributedGraph &graph,
                                     const std::string &source) {
    CommunityCollection out;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        auto tokens = tokenize(line);
        if (is_skippable(tokens))
            continue;
        std::vector<NodeId> members;
        members.reserve(tokens.size());
        for (auto token : tokens) {
            const OriginalId id = parse_id(token, source, line_no);
            auto v = graph.compact_id(id);
            if (!v)
                throw ValidationError(source + ":" + std::to_string(line_no) + ": unknown node id " +
                                      std::to_string(id));
            members.push_back(*v);
        }
        out.communities.push_back(std::move(members));
    }
    out.normalize();
    return out;
}

CommunityCollection load_communities(const std::filesystem::path &path,
                                     const AttributedGraph &graph) {
    auto in = open_input(path);
    return read_communities(in, graph, path.string());
}

void write_communities(std::ostream &out, const CommunityCollection &communities,
                       const AttributedGraph &graph) {
    for (const auto &community : communities.communities) {
        for (std::size_t k = 0; k < community.size(); ++k) {
            if (k > 0)
                out << ' ';
            out << graph.original_id(community[k]);
        }
        out << '\n';
    }
}

void save_communities(const std::filesystem::path &path, const CommunityCollection &communities,
                      const AttributedGraph &graph) {
    std::ofstream out(path);
    if (!out)
        throw Error("cannot open '" + path.string() + "' for writing");
    write_communities(out, communities, graph);
    if (!out)
        throw Error("failed writing '" + path.string() + "'");
}

} // namespace tricomm
