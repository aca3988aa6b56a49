#include <gtest/gtest.h>

#include <random>

#include <lexsweep/certify.hpp>
#include <lexsweep/classes.hpp>
#include <lexsweep/search.hpp>

#include "oracles.hpp"

using namespace lexsweep;

namespace {

Ordering ord(std::vector<Vertex> seq) { return Ordering(std::move(seq)); }

Graph c4() { return catalog::cycle(4); }

Ordering random_ordering(std::size_t n, std::mt19937_64& rng) {
    std::vector<Vertex> seq(n);
    std::iota(seq.begin(), seq.end(), Vertex{0});
    std::shuffle(seq.begin(), seq.end(), rng);
    return Ordering(seq);
}

}  // namespace

TEST(Lbfs, PathFromEndpoint) {
    EXPECT_EQ(lbfs(catalog::path(4), 0), ord({0, 1, 2, 3}));
}

TEST(Lbfs, CompleteGraphFallsBackToMinIndex) {
    EXPECT_EQ(lbfs(catalog::complete(4), 2), ord({2, 0, 1, 3}));
}

TEST(Lbfs, FourCycle) {
    EXPECT_EQ(lbfs(c4(), 0), ord({0, 1, 3, 2}));
    EXPECT_EQ(lbfs_naive(c4(), 0), ord({0, 1, 3, 2}));
}

TEST(Lbfs, NaiveAgreesOnPath) {
    EXPECT_EQ(lbfs_naive(catalog::path(4), 0), ord({0, 1, 2, 3}));
}

TEST(Lbfs, StartOutOfRange) {
    EXPECT_THROW(lbfs(c4(), 4), std::out_of_range);
    EXPECT_THROW(lbfs_naive(c4(), 9), std::out_of_range);
    EXPECT_THROW(lbfs(Graph(0), 0), std::out_of_range);
}

TEST(Lbfs, PriorMustCoverGraph) {
    EXPECT_THROW(lbfs(c4(), 0, TieBreak::prior_rightmost(Ordering::identity(3))),
                 std::invalid_argument);
}

TEST(Lbfs, DisconnectedGraphRestartsByTieBreak) {
    const Graph g = Graph::from_edge_list(5, {{3, 4}, {0, 1}});
    EXPECT_EQ(lbfs(g, 3), ord({3, 4, 0, 1, 2}));
    EXPECT_EQ(lbfs(g, 2, TieBreak::prior_rightmost(ord({4, 3, 2, 1, 0}))), ord({2, 0, 1, 3, 4}));
}

TEST(LbfsPlus, PathReverses) {
    EXPECT_EQ(lbfs_plus(catalog::path(4), ord({0, 1, 2, 3})), ord({3, 2, 1, 0}));
}

TEST(LbfsPlus, FourCycleTiesGoRightmost) {
    EXPECT_EQ(lbfs_plus(c4(), ord({0, 1, 3, 2})), ord({2, 3, 1, 0}));
}

TEST(LbfsPlus, CompleteGraphReversesEveryPrior) {
    for (std::size_t n = 2; n <= 6; ++n) {
        const Graph k = catalog::complete(n);
        for (const auto& seq : oracle::all_permutations(n)) {
            const Ordering pi(seq);
            const Ordering plus = lbfs_plus(k, pi);
            ASSERT_EQ(plus, pi.reversed());
            ASSERT_EQ(std::vector<Vertex>(plus.begin(), plus.end()), oracle::lbfs_plus(k, seq));
        }
    }
}

TEST(LbfsPlus, EmptyGraph) {
    EXPECT_TRUE(lbfs_plus(Graph(0), Ordering{}).empty());
    EXPECT_THROW(lbfs_plus(c4(), Ordering::identity(5)), std::invalid_argument);
}

TEST(Lbfs, EnginesAgreeExhaustivelyOnFiveVertices) {
    for (std::size_t n = 1; n <= 5; ++n) {
        oracle::for_each_graph(n, [n](const Graph& g) {
            for (Vertex s = 0; s < n; ++s) {
                const Ordering fast = lbfs(g, s);
                ASSERT_EQ(fast, lbfs_naive(g, s));
                const auto labels =
                    oracle::lbfs_by_labels(g, s, [](Vertex a, Vertex b) { return a < b; });
                ASSERT_EQ(std::vector<Vertex>(fast.begin(), fast.end()), labels);
            }
        });
    }
}

TEST(Lbfs, EnginesAgreeOnRandomGraphsUnderEveryTieBreak) {
    std::mt19937_64 rng(41);
    for (int t = 0; t < 300; ++t) {
        const std::size_t n = 1 + t % 40;
        const double p = (t % 3 == 0) ? 0.05 : 0.3;
        const Graph g = oracle::random_graph(n, p, rng);
        const Vertex s = static_cast<Vertex>(rng() % n);
        for (const TieBreak& tb : {TieBreak::min_index(),
                                   TieBreak::prior_rightmost(random_ordering(n, rng)),
                                   TieBreak::seeded(rng())}) {
            ASSERT_EQ(lbfs(g, s, tb), lbfs_naive(g, s, tb));
        }
        const Ordering prior = random_ordering(n, rng);
        const auto expected = oracle::lbfs_plus(g, std::vector<Vertex>(prior.begin(), prior.end()));
        const Ordering plus = lbfs_plus(g, prior);
        ASSERT_EQ(std::vector<Vertex>(plus.begin(), plus.end()), expected);
    }
}

TEST(Lbfs, OutputsAreReachableLbfsOrderings) {
    for (std::size_t n = 1; n <= 5; ++n) {
        oracle::for_each_graph(n, [n](const Graph& g) {
            const auto reachable = oracle::lbfs_reachable(g);
            std::mt19937_64 rng(n);
            for (Vertex s = 0; s < n; ++s) {
                for (const TieBreak& tb : {TieBreak::min_index(), TieBreak::seeded(rng())}) {
                    const Ordering sigma = lbfs(g, s, tb);
                    ASSERT_TRUE(reachable.count({sigma.begin(), sigma.end()}));
                    ASSERT_EQ(sigma.front(), s);
                }
            }
        });
    }
}

TEST(Lbfs, OutputsSatisfyFourPointCondition) {
    std::mt19937_64 rng(43);
    for (int t = 0; t < 500; ++t) {
        const std::size_t n = 1 + t % 30;
        const Graph g = oracle::random_graph(n, 0.1 + 0.2 * (t % 4), rng);
        const Ordering sigma = lbfs(g, static_cast<Vertex>(rng() % n), TieBreak::seeded(rng()));
        ASSERT_TRUE(is_lbfs_ordering(g, sigma).passed());
        const Ordering plus = lbfs_plus(g, sigma);
        ASSERT_TRUE(is_lbfs_ordering(g, plus).passed());
        ASSERT_EQ(plus.front(), sigma.back());
    }
}

TEST(Lbfs, SeededTieBreakIsDeterministic) {
    std::mt19937_64 rng(47);
    const Graph g = oracle::random_graph(50, 0.1, rng);
    EXPECT_EQ(lbfs(g, 7, TieBreak::seeded(99)), lbfs(g, 7, TieBreak::seeded(99)));
    EXPECT_EQ(TieBreak::seeded(99).ranks(50), TieBreak::seeded(99).ranks(50));
    EXPECT_NE(TieBreak::seeded(99).ranks(50), TieBreak::seeded(100).ranks(50));
}

TEST(Lmpn, Examples) {
    EXPECT_EQ(lmpn(catalog::path(3), ord({0, 1, 2}), 1, 2), std::optional<Vertex>(0));
    EXPECT_FALSE(lmpn(catalog::complete(3), ord({2, 0, 1}), 0, 1).has_value());
    EXPECT_FALSE(lmpn(c4(), ord({0, 1, 2, 3}), 1, 3).has_value());
}

TEST(Lmpn, PicksLeftmostPrivateNeighbour) {
    // 1 has private neighbours 0 and 2 with respect to 3.
    const Graph g = Graph::from_edge_list(4, {{0, 1}, {1, 2}, {1, 3}});
    EXPECT_EQ(lmpn(g, ord({2, 0, 1, 3}), 1, 3), std::optional<Vertex>(2));
    EXPECT_EQ(lmpn(g, ord({0, 2, 1, 3}), 1, 3), std::optional<Vertex>(0));
    EXPECT_THROW(lmpn(g, ord({0, 2, 1, 3}), 1, 1), std::invalid_argument);
}
