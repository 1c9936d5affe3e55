#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>

#include "tricomm/attributed_graph.hpp"

namespace tricomm {

// Text formats
// ------------
// Lines whose first non-blank character is '#' are comments; blank lines are
// ignored. Tokens are separated by spaces or tabs.
//
//   edge list     "<id> <id>"                       one undirected edge per line
//   dense feats   "<id> <v_0> <v_1> ... <v_{p-1}>"  every dense row has the same width
//   sparse feats  "<id> <dim>:<value> ..."          0-based dims; omitted dims are 0
//   communities   "<id> <id> ..."                   one community per line

/// SNAP-style edge list. Self-loops dropped, duplicates collapsed, ids
/// compacted to 0..n-1 in ascending order of original id.
AttributedGraph load_edge_list(const std::filesystem::path &path);
AttributedGraph read_edge_list(std::istream &in, const std::string &source = "<stream>");

/// Attaches a feature matrix. Rows may be dense or sparse (mixed per line is
/// allowed); p is the widest row seen. Nodes without a row get zeros; ids that
/// are not in the graph are appended as isolated nodes.
AttributedGraph attach_features(const AttributedGraph &graph, const std::filesystem::path &path,
                                FeatureKind kind);
AttributedGraph read_features(const AttributedGraph &graph, std::istream &in, FeatureKind kind,
                              const std::string &source = "<stream>");

/// Picks Binary when every value in the file is 0 or 1, Continuous otherwise.
FeatureKind sniff_feature_kind(const std::filesystem::path &path);

/// Community-per-line file, translated to compact ids of `graph`. Line order
/// is preserved; a node may occur on several lines.
CommunityCollection load_communities(const std::filesystem::path &path,
                                     const AttributedGraph &graph);
CommunityCollection read_communities(std::istream &in, const AttributedGraph &graph,
                                     const std::string &source = "<stream>");

/// Writes one community per line in original ids, members ascending by compact id.
void write_communities(std::ostream &out, const CommunityCollection &communities,
                       const AttributedGraph &graph);
void save_communities(const std::filesystem::path &path, const CommunityCollection &communities,
                      const AttributedGraph &graph);

} // namespace tricomm
