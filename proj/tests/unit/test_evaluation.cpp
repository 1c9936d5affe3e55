#include <gtest/gtest.h>

#include <cmath>
#include <numeric>
#include <random>

#include "oracle.hpp"
#include "random_graphs.hpp"
#include "tricomm/errors.hpp"
#include "tricomm/evaluation.hpp"

namespace tricomm {
namespace {

CommunityCollection singletons(std::size_t n) {
    CommunityCollection out;
    for (NodeId v = 0; v < n; ++v)
        out.communities.push_back({v});
    return out;
}

TEST(AvgF1, Examples) {
    const CommunityCollection truth{{{0, 1, 2}, {3, 4, 5}}};
    EXPECT_DOUBLE_EQ(avg_f1(truth, truth), 1.0);
    EXPECT_NEAR(avg_f1(CommunityCollection{{{0, 1, 2, 3}}}, singletons(4)), 0.4, 1e-12);

    const CommunityCollection moved{{{0, 1}, {2, 3, 4, 5}}};
    // best matches are pairwise in both directions: F1 = 4/5 and 6/7
    EXPECT_NEAR(avg_f1(moved, truth), (0.8 + 6.0 / 7.0) / 2.0, 1e-12);
}

TEST(AvgF1, EmptyCollectionIsUndefined) {
    EXPECT_THROW(avg_f1(CommunityCollection{}, singletons(2)), UndefinedMetric);
    EXPECT_THROW(avg_f1(singletons(2), CommunityCollection{}), UndefinedMetric);
}

TEST(Modularity, Examples) {
    const auto g = testing::two_triangles(false);
    EXPECT_NEAR(modularity(g, CommunityCollection{{{0, 1, 2, 3, 4, 5}}}), 0.0, 1e-12);
    EXPECT_NEAR(modularity(g, CommunityCollection{{{0, 1, 2}, {3, 4, 5}}}), 0.5, 1e-12);
    // only the degree terms survive: -6 * 2^2 / (4 * 6^2)
    EXPECT_NEAR(modularity(g, singletons(6)), -24.0 / 144.0, 1e-12);
    EXPECT_NEAR(modularity(testing::two_triangles(), CommunityCollection{{{0, 1, 2}, {3, 4, 5}}}),
                5.0 / 14.0, 1e-12);
}

TEST(Modularity, NeedsEdges) {
    EXPECT_THROW(modularity(AttributedGraph(3, std::vector<Edge>{}), singletons(3)), UndefinedMetric);
}

TEST(Density, Examples) {
    const auto k4 = testing::clique(4);
    const std::vector<NodeId> all{0, 1, 2, 3};
    EXPECT_DOUBLE_EQ(density(k4, all), 1.0);
    AttributedGraph empty(4, std::vector<Edge>{});
    EXPECT_EQ(density(empty, all), 0.0);
    AttributedGraph path(4, std::vector<Edge>{{0, 1}, {1, 2}, {2, 3}});
    EXPECT_DOUBLE_EQ(density(path, all), 0.5);
    EXPECT_EQ(density(k4, std::vector<NodeId>{2}), 0.0);
}

TEST(Entropy, Examples) {
    std::vector<Edge> none;
    auto shared = AttributedGraph(4, none).with_features(FeatureKind::Binary, 2, {1, 0, 1, 0, 1, 0, 1, 0});
    const std::vector<NodeId> all{0, 1, 2, 3};
    EXPECT_EQ(entropy(shared, all), 0.0);
    auto half = AttributedGraph(4, none).with_features(FeatureKind::Binary, 1, {1, 1, 0, 0});
    EXPECT_NEAR(entropy(half, all), -0.5 * std::log(0.5), 1e-12);
    EXPECT_NEAR(entropy(half, std::vector<NodeId>{0, 2}), -0.5 * 0.5 * std::log(0.5), 1e-12);
    EXPECT_THROW(entropy(AttributedGraph(4, none), all), UndefinedMetric);
}

TEST(Overlaps, Examples) {
    EXPECT_DOUBLE_EQ(overlaps_stat(CommunityCollection{{{0, 1}, {2}}}, 3), 1.0);
    EXPECT_DOUBLE_EQ(overlaps_stat(CommunityCollection{{{0, 1}, {1, 2}}}, 3), 4.0 / 3.0);
    EXPECT_DOUBLE_EQ(overlaps_stat(CommunityCollection{{{0, 1}, {0, 1}}}, 2), 2.0);
    EXPECT_THROW(overlaps_stat(CommunityCollection{}, 0), UndefinedMetric);
}

TEST(Evaluate, ReportShape) {
    const auto g = testing::two_triangles();
    const CommunityCollection truth{{{0, 1, 2}, {3, 4, 5}}};
    const auto report = evaluate(g, truth, truth);
    EXPECT_DOUBLE_EQ(report.avg_f1, 1.0);
    EXPECT_EQ(report.community_count, 2U);
    EXPECT_EQ(report.density_per_community.size(), 2U);
    ASSERT_TRUE(report.entropy_per_community.has_value());
    EXPECT_EQ(report.entropy_per_community->size(), 2U);
    EXPECT_DOUBLE_EQ(report.overlaps, 1.0);

    AttributedGraph bare(6, g.edges());
    const auto plain = evaluate(bare, CommunityCollection{{{0, 1, 2, 3, 4, 5}}}, truth);
    EXPECT_FALSE(plain.entropy_per_community.has_value());
    EXPECT_FALSE(plain.entropy_total.has_value());
    ASSERT_TRUE(plain.modularity_q.has_value());
    EXPECT_NEAR(*plain.modularity_q, 0.0, 1e-12);
}

void expect_close(double actual, double expected) {
    EXPECT_NEAR(actual, expected, 1e-9 * std::max(1.0, std::fabs(expected)));
}

TEST(EvaluationOracle, MatchesLiteralFormulas) {
    std::mt19937_64 rng(21);
    for (std::uint64_t seed = 0; seed < 60; ++seed) {
        const std::size_t n = 5 + seed % 26;
        const auto kind = seed % 2 ? FeatureKind::Binary : FeatureKind::Continuous;
        const auto g = testing::random_graph(n, 0.25, kind, 1 + seed % 6, seed);
        const oracle::Dense dense(g);
        const auto detected = testing::random_cover(n, 1 + seed % 5, seed % 3 ? 0.3 : 0.0, rng);
        const auto truth = testing::random_cover(n, 1 + seed % 4, 0.2, rng);
        const auto d = oracle::to_sets(detected);
        const auto t = oracle::to_sets(truth);
        expect_close(avg_f1(detected, truth), oracle::avg_f1(d, t));
        if (g.edge_count() > 0)
            expect_close(modularity(g, detected), dense.modularity(d));
        for (std::size_t k = 0; k < d.size(); ++k) {
            expect_close(density(g, detected.communities[k]), dense.density(d[k]));
            expect_close(entropy(g, detected.communities[k]), dense.entropy(d[k]));
        }
    }
}

TEST(EvaluationProperties, SymmetryAndRanges) {
    std::mt19937_64 rng(22);
    for (std::uint64_t seed = 0; seed < 40; ++seed) {
        const std::size_t n = 30;
        const auto g = testing::random_graph(n, 0.2, FeatureKind::Binary, 4, seed);
        const auto a = testing::random_cover(n, 3, 0.3, rng);
        const auto b = testing::random_cover(n, 5, 0.0, rng);
        EXPECT_NEAR(avg_f1(a, b), avg_f1(b, a), 1e-12);
        EXPECT_NEAR(avg_f1(a, a), 1.0, 1e-12);
        const double q = modularity(g, b);
        EXPECT_GE(q, -0.5);
        EXPECT_LE(q, 1.0);
        std::vector<NodeId> everyone(n);
        std::iota(everyone.begin(), everyone.end(), NodeId{0});
        EXPECT_NEAR(modularity(g, CommunityCollection{{everyone}}), 0.0, 1e-12);
        for (const auto &c : a.communities) {
            const double dens = density(g, c);
            EXPECT_GE(dens, 0.0);
            EXPECT_LE(dens, 1.0);
            EXPECT_GE(entropy(g, c), 0.0);
        }
    }
}

TEST(EvaluationProperties, EntropyVanishesOnlyForPureFractions) {
    std::vector<Edge> none;
    // every feature present in all or none of the members
    auto pure = AttributedGraph(3, none).with_features(FeatureKind::Binary, 3, {1, 0, 1, 1, 0, 1, 1, 0, 1});
    EXPECT_EQ(entropy(pure, std::vector<NodeId>{0, 1, 2}), 0.0);
    auto mixed = AttributedGraph(3, none).with_features(FeatureKind::Binary, 3, {1, 0, 1, 1, 1, 1, 1, 0, 1});
    EXPECT_GT(entropy(mixed, std::vector<NodeId>{0, 1, 2}), 0.0);
}

} // namespace
} // namespace tricomm
