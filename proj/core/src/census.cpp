#include "tricomm/census.hpp"

#include <algorithm>
#include <bit>
#include <vector>

#include "tricomm/errors.hpp"
#include "tricomm/triangles.hpp"

namespace tricomm {
namespace {

using Word = std::uint64_t;

class Bitset {
public:
    explicit Bitset(std::size_t bits = 0) : words_((bits + 63) / 64, 0) {}
    void set(std::size_t i) { words_[i / 64] |= Word{1} << (i % 64); }
    void reset(std::size_t i) { words_[i / 64] &= ~(Word{1} << (i % 64)); }
    bool test(std::size_t i) const { return (words_[i / 64] >> (i % 64)) & 1U; }
    std::size_t word_count() const { return words_.size(); }
    Word word(std::size_t w) const { return words_[w]; }
    Word &word(std::size_t w) { return words_[w]; }
    void clear_words(std::size_t from) { std::fill(words_.begin() + static_cast<std::ptrdiff_t>(from), words_.end(), 0); }

private:
    std::vector<Word> words_;
};

/// Bits strictly above `v` within word `w`.
Word above_mask(std::size_t w, NodeId v) {
    const std::size_t first = w * 64;
    if (v + 1 <= first)
        return ~Word{0};
    const std::size_t shift = v + 1 - first;
    return shift >= 64 ? 0 : (~Word{0} << shift);
}

class FeatureTripleCounter {
public:
    explicit FeatureTripleCounter(const AttributedGraph &graph)
        : graph_(graph), n_(graph.node_count()), dims_(graph.feature_dim()), candidates_(n_) {
        for (std::size_t l = 0; l < dims_; ++l)
            holders_.emplace_back(n_);
        for (NodeId v = 0; v < n_; ++v) {
            auto sig = graph.signature(v);
            for (std::size_t w = 0; w < sig.size(); ++w) {
                Word bits = sig[w];
                while (bits) {
                    holders_[w * 64 + static_cast<std::size_t>(std::countr_zero(bits))].set(v);
                    bits &= bits - 1;
                }
            }
        }
    }

    /// Adds, per edge count, the triples x < y < z drawn from `universe`
    /// (given both as sorted ids and as a bitset) whose signatures intersect.
    /// `exclude(x, y, mask)` may clear bits of z that must not be counted.
    template <class Exclude>
    void tally(std::span<const NodeId> members, const Bitset &universe, Exclude &&exclude,
               std::array<std::uint64_t, 4> &by_edges) {
        Bitset x_row(n_);
        for (std::size_t a = 0; a < members.size(); ++a) {
            const NodeId x = members[a];
            for (NodeId w : graph_.neighbors(x))
                x_row.set(w);
            for (std::size_t b = a + 1; b < members.size(); ++b) {
                const NodeId y = members[b];
                if (!graph_.signatures_intersect(x, y))
                    continue;
                const std::size_t first_word = (y + 1) / 64;
                if (!build_candidates(x, y, universe, first_word))
                    continue;
                exclude(x, y, candidates_, first_word);

                std::uint64_t total = 0;
                std::uint64_t to_x = 0;
                for (std::size_t w = first_word; w < candidates_.word_count(); ++w) {
                    const Word bits = candidates_.word(w);
                    total += static_cast<std::uint64_t>(std::popcount(bits));
                    to_x += static_cast<std::uint64_t>(std::popcount(bits & x_row.word(w)));
                }
                if (total == 0)
                    continue;
                std::uint64_t to_y = 0;
                std::uint64_t to_both = 0;
                for (NodeId w : graph_.neighbors(y)) {
                    if (w > y && candidates_.test(w)) {
                        ++to_y;
                        to_both += x_row.test(w) ? 1 : 0;
                    }
                }
                // z-side edge counts: both, exactly one, none
                const std::uint64_t two = to_both;
                const std::uint64_t one = to_x + to_y - 2 * to_both;
                const std::uint64_t zero = total - two - one;
                const int base = graph_.has_edge(x, y) ? 1 : 0;
                by_edges[base + 0] += zero;
                by_edges[base + 1] += one;
                by_edges[base + 2] += two;
            }
            for (NodeId w : graph_.neighbors(x))
                x_row.reset(w);
        }
    }

private:
    bool build_candidates(NodeId x, NodeId y, const Bitset &universe, std::size_t first_word) {
        candidates_.clear_words(first_word);
        auto sx = graph_.signature(x);
        auto sy = graph_.signature(y);
        bool any = false;
        for (std::size_t sw = 0; sw < sx.size(); ++sw) {
            Word common = sx[sw] & sy[sw];
            while (common) {
                const auto l = sw * 64 + static_cast<std::size_t>(std::countr_zero(common));
                common &= common - 1;
                const Bitset &holders = holders_[l];
                for (std::size_t w = first_word; w < candidates_.word_count(); ++w)
                    candidates_.word(w) |= holders.word(w);
                any = true;
            }
        }
        if (!any)
            return false;
        for (std::size_t w = first_word; w < candidates_.word_count(); ++w)
            candidates_.word(w) &= universe.word(w) & above_mask(w, y);
        return true;
    }

    const AttributedGraph &graph_;
    std::size_t n_;
    std::size_t dims_;
    std::vector<Bitset> holders_;
    Bitset candidates_;
};

bool share_community(const std::vector<std::size_t> &a, const std::vector<std::size_t> &b,
                     const std::vector<std::size_t> &c) {
    auto ia = a.begin(), ib = b.begin(), ic = c.begin();
    while (ia != a.end() && ib != b.end() && ic != c.end()) {
        const std::size_t hi = std::max({*ia, *ib, *ic});
        if (*ia == hi && *ib == hi && *ic == hi)
            return true;
        if (*ia < hi)
            ++ia;
        if (*ib < hi)
            ++ib;
        if (*ic < hi)
            ++ic;
    }
    return false;
}

} // namespace

CensusReport census(const AttributedGraph &graph, const CommunityCollection &ground_truth,
                    int min_feature_edges) {
    validate(TriangleOptions{min_feature_edges});
    if (!graph.has_features())
        throw UnsupportedOperation("the triangle census needs node features");
    ground_truth.validate(graph.node_count());

    const std::size_t n = graph.node_count();
    const auto membership = ground_truth.membership_index(n);
    CensusReport report;
    report.min_feature_edges = min_feature_edges;

    // topological triangles u < v < w
    for (NodeId u = 0; u < n; ++u) {
        auto row_u = graph.neighbors(u);
        for (NodeId v : row_u) {
            if (v <= u)
                continue;
            auto row_v = graph.neighbors(v);
            auto a = std::upper_bound(row_u.begin(), row_u.end(), v);
            auto b = std::upper_bound(row_v.begin(), row_v.end(), v);
            while (a != row_u.end() && b != row_v.end()) {
                if (*a < *b) {
                    ++a;
                } else if (*b < *a) {
                    ++b;
                } else {
                    const NodeId w = *a;
                    if (!membership[u].empty() && !membership[v].empty() && !membership[w].empty()) {
                        ++report.topo_in_groundtruth;
                        if (share_community(membership[u], membership[v], membership[w]))
                            ++report.topo_same_community;
                    }
                    ++a;
                    ++b;
                }
            }
        }
    }

    FeatureTripleCounter counter(graph);

    std::vector<NodeId> covered;
    Bitset covered_bits(n);
    for (NodeId v = 0; v < n; ++v) {
        if (!membership[v].empty()) {
            covered.push_back(v);
            covered_bits.set(v);
        }
    }
    std::array<std::uint64_t, 4> in_gt{};
    counter.tally(covered, covered_bits, [](NodeId, NodeId, Bitset &, std::size_t) {}, in_gt);

    std::vector<Bitset> community_bits;
    community_bits.reserve(ground_truth.size());
    for (const auto &c : ground_truth.communities) {
        Bitset bits(n);
        for (NodeId v : c)
            bits.set(v);
        community_bits.push_back(std::move(bits));
    }
    std::array<std::uint64_t, 4> same{};
    for (std::size_t k = 0; k < ground_truth.size(); ++k) {
        // a triple shared with an earlier community was already counted there
        auto exclude_earlier = [&](NodeId x, NodeId y, Bitset &candidates, std::size_t first_word) {
            const auto &mx = membership[x];
            const auto &my = membership[y];
            auto ix = mx.begin(), iy = my.begin();
            while (ix != mx.end() && iy != my.end() && *ix < k && *iy < k) {
                if (*ix < *iy) {
                    ++ix;
                } else if (*iy < *ix) {
                    ++iy;
                } else {
                    const Bitset &earlier = community_bits[*ix];
                    for (std::size_t w = first_word; w < candidates.word_count(); ++w)
                        candidates.word(w) &= ~earlier.word(w);
                    ++ix;
                    ++iy;
                }
            }
        };
        counter.tally(ground_truth.communities[k], community_bits[k], exclude_earlier, same);
    }

    for (int e = 0; e < 4; ++e) {
        if (e < min_feature_edges)
            continue;
        report.feat_in_groundtruth += in_gt[static_cast<std::size_t>(e)];
        report.feat_same_community += same[static_cast<std::size_t>(e)];
        report.feat_edge_breakdown[static_cast<std::size_t>(e)] = same[static_cast<std::size_t>(e)];
    }
    return report;
}

} // namespace tricomm
