#include <gtest/gtest.h>

#include <random>

#include "oracle.hpp"
#include "random_graphs.hpp"
#include "tricomm/errors.hpp"
#include "tricomm/triangles.hpp"

namespace tricomm {
namespace {

AttributedGraph three_nodes(FeatureKind kind, std::vector<double> rows, std::size_t dim) {
    std::vector<Edge> edges{{0, 1}, {1, 2}, {0, 2}};
    return AttributedGraph(3, edges).with_features(kind, dim, std::move(rows));
}

TEST(FeatureTriangle, BinarySharedDimension) {
    EXPECT_TRUE(is_feature_triangle(three_nodes(FeatureKind::Binary, {1, 0, 1, 1, 1, 0}, 2), 0, 1, 2));
    EXPECT_FALSE(is_feature_triangle(three_nodes(FeatureKind::Binary, {1, 0, 0, 1, 1, 0}, 2), 0, 1, 2));
}

TEST(FeatureTriangle, ContinuousSharedArgmax) {
    auto g = three_nodes(FeatureKind::Continuous, {0.1, 0.9, 0.2, 0.8, 0.4, 0.6}, 2);
    EXPECT_TRUE(is_feature_triangle(g, 0, 1, 2));
    auto h = three_nodes(FeatureKind::Continuous, {0.1, 0.9, 0.2, 0.8, 0.6, 0.4}, 2);
    EXPECT_FALSE(is_feature_triangle(h, 0, 1, 2));
}

TEST(FeatureTriangle, NeedsFeatures) {
    AttributedGraph g(3, std::vector<Edge>{{0, 1}});
    EXPECT_THROW(is_feature_triangle(g, 0, 1, 2), UnsupportedOperation);
}

TEST(TopologicalCounts, CliquesAndStars) {
    const auto k3 = testing::clique(3, 0);
    const auto k4 = testing::clique(4, 0);
    const NodeSet v3 = NodeSet::all(3);
    const NodeSet v4 = NodeSet::all(4);
    EXPECT_EQ(count_t(k3, {0, v3}), 1U);
    EXPECT_EQ(count_t(k4, {2, v4}), 3U);
    EXPECT_EQ(count_vt(k3, {1, v3}), 2U);

    AttributedGraph star(5, std::vector<Edge>{{0, 1}, {0, 2}, {0, 3}, {0, 4}});
    for (NodeId v = 0; v < 5; ++v)
        EXPECT_EQ(count_vt(star, {v, NodeSet::all(5)}), 0U);
}

TEST(CombinedCounts, DualTypeTripleCountsTwiceUnderSum) {
    const auto k3 = testing::clique(3, 1);
    const NodeSet all = NodeSet::all(3);
    EXPECT_EQ(count_tf(k3, {0, all, {2, TriangleCombine::Sum}}), 2U);
    EXPECT_EQ(count_tf(k3, {0, all, {2, TriangleCombine::Union}}), 1U);
    EXPECT_EQ(count_vtf(k3, {0, all}), 2U);

    auto disjoint = three_nodes(FeatureKind::Binary, {1, 0, 0, 0, 1, 0, 0, 0, 1}, 3);
    EXPECT_EQ(count_tf(disjoint, {0, all}), 1U);
}

TEST(CombinedCounts, AnchorWithoutTrianglesHasNoParticipants) {
    AttributedGraph path(3, std::vector<Edge>{{0, 1}, {1, 2}});
    auto g = path.with_features(FeatureKind::Binary, 1, {1, 0, 1});
    EXPECT_EQ(count_vtf(g, {0, NodeSet::all(3)}), 0U);
}

TEST(CombinedCounts, RejectsBadMinFeatureEdges) {
    const auto k3 = testing::clique(3, 1);
    const NodeSet all = NodeSet::all(3);
    EXPECT_THROW(count_tf(k3, {0, all, {4}}), ValidationError);
}

struct Case {
    FeatureKind kind;
    double edge_probability;
};

class OracleEquivalence : public ::testing::TestWithParam<Case> {};

TEST_P(OracleEquivalence, AllCountsMatchExhaustiveTriples) {
    const Case c = GetParam();
    std::mt19937_64 rng(99);
    for (std::uint64_t seed = 0; seed < 12; ++seed) {
        const std::size_t n = 6 + seed % 15;
        auto g = testing::random_graph(n, c.edge_probability, c.kind, 3 + seed % 4, seed * 31 + 5);
        oracle::Dense dense(g);
        for (int trial = 0; trial < 4; ++trial) {
            auto ids = testing::random_subset(n, 0.6, rng);
            const NodeSet set(ids);
            const oracle::Set oset(ids.begin(), ids.end());
            for (NodeId v = 0; v < n; ++v) {
                ASSERT_EQ(count_t(g, {v, set}), dense.t(v, oset));
                ASSERT_EQ(count_vt(g, {v, set}), dense.vt(v, oset));
                for (int m = 0; m <= 3; ++m) {
                    for (auto combine : {TriangleCombine::Sum, TriangleCombine::Union}) {
                        const TriangleOptions opt{m, combine};
                        ASSERT_EQ(count_tf(g, {v, set, opt}), dense.tf(v, oset, opt))
                            << "seed " << seed << " node " << v << " m " << m;
                        ASSERT_EQ(count_vtf(g, {v, set, opt}), dense.vtf(v, oset, opt))
                            << "seed " << seed << " node " << v << " m " << m;
                    }
                }
            }
        }
    }
}

INSTANTIATE_TEST_SUITE_P(Kinds, OracleEquivalence,
                         ::testing::Values(Case{FeatureKind::None, 0.4}, Case{FeatureKind::Binary, 0.3},
                                           Case{FeatureKind::Binary, 0.7},
                                           Case{FeatureKind::Continuous, 0.4}));

TEST(TriangleProperties, BoundsAndMonotonicity) {
    std::mt19937_64 rng(3);
    for (std::uint64_t seed = 0; seed < 30; ++seed) {
        const auto kind = seed % 2 ? FeatureKind::Binary : FeatureKind::Continuous;
        auto g = testing::random_graph(20, 0.3, kind, 4, seed);
        auto small_ids = testing::random_subset(20, 0.4, rng);
        auto extra = testing::random_subset(20, 0.4, rng);
        const NodeSet small(small_ids);
        const NodeSet large = small.united_with(NodeSet(extra));
        for (NodeId v = 0; v < 20; ++v) {
            const auto t = count_t(g, {v, large});
            const auto vt = count_vt(g, {v, large});
            EXPECT_LE(vt, large.without(v).size());
            EXPECT_LE(count_t(g, {v, small}), t);
            EXPECT_LE(count_vt(g, {v, small}), vt);
            std::uint64_t previous_tf = UINT64_MAX;
            std::uint64_t previous_vtf = UINT64_MAX;
            for (int m = 0; m <= 3; ++m) {
                const TriangleOptions opt{m};
                const auto tf = count_tf(g, {v, large, opt});
                const auto vtf = count_vtf(g, {v, large, opt});
                EXPECT_LE(t, tf);
                EXPECT_LE(vt, vtf);
                EXPECT_LE(count_tf(g, {v, small, opt}), tf);
                EXPECT_LE(count_vtf(g, {v, small, opt}), vtf);
                EXPECT_LE(tf, previous_tf);
                EXPECT_LE(vtf, previous_vtf);
                previous_tf = tf;
                previous_vtf = vtf;
            }
        }
    }
}

TEST(TotalTriangles, MatchesPerNodeSum) {
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
        auto g = testing::random_graph(30, 0.3, FeatureKind::None, 0, seed);
        std::uint64_t per_node = 0;
        const NodeSet all = NodeSet::all(30);
        for (NodeId v = 0; v < 30; ++v)
            per_node += count_t(g, {v, all});
        EXPECT_EQ(total_triangles(g) * 3, per_node);
    }
}

} // namespace
} // namespace tricomm
