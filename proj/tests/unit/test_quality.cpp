#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "oracle.hpp"
#include "random_graphs.hpp"
#include "tricomm/quality.hpp"

namespace tricomm {
namespace {

void expect_close(double actual, double expected) {
    EXPECT_NEAR(actual, expected, 1e-9 * std::max(1.0, std::fabs(expected)));
}

NodeSet to_node_set(const oracle::Set &s) { return NodeSet(std::vector<NodeId>(s.begin(), s.end())); }

oracle::Set to_oracle_set(const NodeSet &s) { return {s.begin(), s.end()}; }

TEST(Wcc, Examples) {
    AttributedGraph lonely(3, std::vector<Edge>{{1, 2}});
    EXPECT_EQ(wcc_node(lonely, 0, {0}), 0.0);

    EXPECT_DOUBLE_EQ(wcc_node(testing::clique(3), 0, NodeSet::all(3)), 1.0);

    const auto g = testing::two_triangles();
    EXPECT_DOUBLE_EQ(wcc_node(g, 0, {0, 1, 2}), 1.0);
    EXPECT_DOUBLE_EQ(wcc_node(g, 2, {0, 1, 2}), 1.0);
}

TEST(Wcc, PartitionExamples) {
    EXPECT_DOUBLE_EQ(wcc_partition(testing::clique(3), CommunityCollection{{{0, 1, 2}}}), 1.0);
    EXPECT_DOUBLE_EQ(wcc_partition(testing::two_triangles(false),
                                   CommunityCollection{{{0, 1, 2}, {3, 4, 5}}}),
                     1.0);
    AttributedGraph path(4, std::vector<Edge>{{0, 1}, {1, 2}, {2, 3}});
    EXPECT_EQ(wcc_partition(path, CommunityCollection{{{0, 1}, {2, 3}}}), 0.0);
}

TEST(WccStar, Examples) {
    const auto k3 = testing::clique(3, 1);
    EXPECT_DOUBLE_EQ(wcc_star_node(k3, 0, NodeSet::all(3)), 0.5);
    AttributedGraph lonely(2, std::vector<Edge>{{0, 1}});
    EXPECT_EQ(wcc_star_node(lonely, 0, {0, 1}), 0.0);
}

TEST(Tightness, Examples) {
    AttributedGraph star(8, std::vector<Edge>{{0, 1}, {0, 2}, {0, 3}, {0, 4}});
    EXPECT_DOUBLE_EQ(tightness(star, 0, {1, 2, 3, 4}), 0.25);
    EXPECT_DOUBLE_EQ(tightness(star, 0, {1, 2, 5, 6, 7}), 0.1);
    EXPECT_EQ(tightness(star, 0, {5, 6}), 0.0);
    EXPECT_EQ(tightness(star, 5, {0}), 0.0);
}

TEST(Homogeneity, Examples) {
    std::vector<Edge> none;
    auto binary = AttributedGraph(2, none).with_features(FeatureKind::Binary, 2, {1, 0, 0, 1});
    EXPECT_DOUBLE_EQ(homogeneity(binary, 0, {1}), 1.0);
    EXPECT_EQ(homogeneity(binary, 0, {0}), 0.0);
    auto continuous =
        AttributedGraph(2, none).with_features(FeatureKind::Continuous, 2, {0.5, 0.5, 0.0, 1.0});
    EXPECT_DOUBLE_EQ(homogeneity(continuous, 0, {1}), 0.5);
}

TEST(Utility, Examples) {
    AttributedGraph isolated(3, std::vector<Edge>{});
    const auto u = node_utility(isolated, 1, {1});
    EXPECT_EQ(u.utility, 0.0);
    EXPECT_EQ(u.wcc_star, 0.0);

    const auto k3 = testing::clique(3, 1);
    const auto b = node_utility(k3, 0, NodeSet::all(3));
    EXPECT_DOUBLE_EQ(b.wcc_star, 0.5);
    EXPECT_DOUBLE_EQ(b.tightness, 1.0 / 3.0);
    EXPECT_EQ(b.homogeneity, 0.0);
    EXPECT_NEAR(b.utility, 5.0 / 6.0, 1e-12);
    // v is joined whether or not it is listed
    EXPECT_DOUBLE_EQ(node_utility(k3, 0, {1, 2}).utility, b.utility);

    EXPECT_NEAR(objective(k3, CommunityCollection{{{0, 1, 2}}}), 2.5, 1e-12);
    EXPECT_EQ(objective(isolated, CommunityCollection{{{0}, {1}, {2}}}), 0.0);
}

struct Instance {
    FeatureKind kind;
    double edge_probability;
};

class QualityOracle : public ::testing::TestWithParam<Instance> {};

TEST_P(QualityOracle, MatchesLiteralFormulas) {
    const auto [kind, edge_probability] = GetParam();
    std::mt19937_64 rng(static_cast<std::uint64_t>(edge_probability * 1000) + static_cast<int>(kind));
    for (std::uint64_t seed = 0; seed < 12; ++seed) {
        const std::size_t n = 6 + seed % 10;
        const auto g = testing::random_graph(n, edge_probability, kind, 2 + seed % 4, seed * 31 + 7);
        oracle::Dense dense(g);
        const auto cover = testing::random_cover(n, 1 + seed % 4, 0.25, rng);
        const auto sets = oracle::to_sets(cover);
        for (int m = 0; m <= 3; ++m) {
            for (auto combine : {TriangleCombine::Sum, TriangleCombine::Union}) {
                const TriangleOptions opt{m, combine};
                expect_close(objective(g, cover, opt), dense.objective(sets, opt));
                for (int trial = 0; trial < 4; ++trial) {
                    const NodeSet c(testing::random_subset(n, 0.4, rng));
                    const auto s = to_oracle_set(c);
                    for (NodeId v = 0; v < n; ++v) {
                        expect_close(wcc_star_node(g, v, c, opt), dense.wcc_star(v, s, opt));
                        const auto u = node_utility(g, v, c, opt);
                        expect_close(u.utility, dense.utility(v, s, opt));
                        if (m == 0 && combine == TriangleCombine::Sum && !c.empty()) {
                            expect_close(wcc_node(g, v, c), dense.wcc(v, s));
                            expect_close(tightness(g, v, c), dense.tightness(v, s));
                            expect_close(homogeneity(g, v, c), dense.homogeneity(v, s));
                        }
                    }
                }
            }
        }
        expect_close(wcc_partition(g, cover), dense.wcc_partition(sets));
    }
}

INSTANTIATE_TEST_SUITE_P(RandomGraphs, QualityOracle,
                         ::testing::Values(Instance{FeatureKind::None, 0.4},
                                           Instance{FeatureKind::Binary, 0.3},
                                           Instance{FeatureKind::Binary, 0.7},
                                           Instance{FeatureKind::Continuous, 0.5}));

TEST(QualityProperties, FeatureBlindReductionUsesTopologicalCounts) {
    std::mt19937_64 rng(5);
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        const std::size_t n = 12;
        const auto g = testing::random_graph(n, 0.45, FeatureKind::None, 0, seed);
        const NodeSet c(testing::random_subset(n, 0.5, rng));
        for (NodeId v = 0; v < n; ++v) {
            const NodeSet nbrs = NodeSet::neighbors_of(g, v);
            const NodeSet nc = nbrs.united_with(c);
            const auto t_nc = static_cast<double>(count_t(g, {v, nc}));
            double expected = 0.0;
            const double den = static_cast<double>(c.without(v).size()) +
                               static_cast<double>(count_vt(g, {v, nbrs}));
            if (t_nc > 0 && den > 0)
                expected = static_cast<double>(count_t(g, {v, c})) / t_nc *
                           static_cast<double>(count_vt(g, {v, nc})) / den;
            expect_close(wcc_star_node(g, v, c), expected);
        }
    }
}

TEST(QualityProperties, ScoresStayInRange) {
    std::mt19937_64 rng(9);
    for (std::uint64_t seed = 0; seed < 30; ++seed) {
        const std::size_t n = 25;
        const auto kind = seed % 2 ? FeatureKind::Binary : FeatureKind::Continuous;
        const auto g = testing::random_graph(n, 0.3, kind, 4, seed);
        const auto cover = testing::random_cover(n, 3, 0.3, rng);
        const double w = wcc_partition(g, cover);
        EXPECT_GE(w, 0.0);
        EXPECT_LE(w, 1.0 + 1e-12);
        for (int trial = 0; trial < 5; ++trial) {
            const NodeSet c(testing::random_subset(n, 0.3, rng));
            if (c.empty())
                continue;
            for (NodeId v = 0; v < n; ++v) {
                for (int m = 0; m <= 3; ++m) {
                    const double s = wcc_star_node(g, v, c, {m});
                    EXPECT_GE(s, 0.0);
                    EXPECT_LE(s, 1.0 + 1e-12);
                }
                const double x = wcc_node(g, v, c);
                EXPECT_GE(x, 0.0);
                EXPECT_LE(x, 1.0 + 1e-12);
                const double t = tightness(g, v, c);
                EXPECT_GE(t, 0.0);
                EXPECT_LE(t, 1.0);
                const double h = homogeneity(g, v, c);
                EXPECT_GE(h, 0.0);
                // continuous levels are multiples of 0.25 in [0, 1]
                EXPECT_LE(h, 1.0 + 1e-12);
            }
        }
    }
}

TEST(QualityProperties, ObjectiveIsSumOfMembershipUtilities) {
    std::mt19937_64 rng(13);
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
        const std::size_t n = 20;
        const auto g = testing::random_graph(n, 0.3, FeatureKind::Binary, 3, seed);
        const auto cover = testing::random_cover(n, 4, 0.5, rng);
        double sum = 0.0;
        for (auto it = cover.communities.rbegin(); it != cover.communities.rend(); ++it) {
            const NodeSet c(*it);
            for (auto v = it->rbegin(); v != it->rend(); ++v)
                sum += node_utility(g, *v, c).utility;
        }
        expect_close(objective(g, cover), sum);
    }
}

} // namespace
} // namespace tricomm
