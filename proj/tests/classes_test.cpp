#include <gtest/gtest.h>

#include <random>

#include <lexsweep/classes.hpp>

#include "oracles.hpp"

using namespace lexsweep;

namespace {

std::set<ClassTag> tags(std::initializer_list<ClassTag> list) { return {list}; }

Graph k4_minus_edge() { return catalog::diamond(); }

}  // namespace

TEST(Catalog, LadderOfOneIsFourCycle) {
    const Graph g = catalog::k_ladder(1);
    EXPECT_EQ(g.order(), 4u);
    EXPECT_EQ(g.edges(), (std::vector<Edge>{{0, 1}, {0, 2}, {1, 3}, {2, 3}}));
    EXPECT_TRUE(oracle::isomorphic(g, catalog::cycle(4)));
}

TEST(Catalog, LadderOfThree) {
    const Graph g = named("k_ladder", 3);
    EXPECT_EQ(g.order(), 8u);
    EXPECT_EQ(g.size(), 10u);
}

TEST(Catalog, LadderContainsSmallerLadder) {
    for (std::size_t k = 2; k <= 4; ++k) {
        const Graph big = catalog::k_ladder(k);
        std::vector<Vertex> keep(2 * k);
        std::iota(keep.begin(), keep.end(), Vertex{0});
        EXPECT_EQ(induced_subgraph(big, keep).graph, catalog::k_ladder(k - 1));
        EXPECT_TRUE(find_induced(big, catalog::k_ladder(k - 1)).has_value());
    }
}

TEST(Catalog, P2P3BarComplementIsEdgePlusPath) {
    const Graph g = catalog::p2p3bar();
    EXPECT_EQ(g.order(), 5u);
    EXPECT_EQ(g.size(), 7u);
    const Graph edge_plus_path = Graph::from_edge_list(5, {{0, 1}, {2, 3}, {3, 4}});
    EXPECT_TRUE(oracle::isomorphic(complement(g), edge_plus_path));
}

TEST(Catalog, DiamondAndDomino) {
    EXPECT_EQ(catalog::diamond().size(), 5u);
    EXPECT_EQ(complement(catalog::diamond()).size(), 1u);
    const Graph d = catalog::domino();
    EXPECT_EQ(d.order(), 6u);
    EXPECT_EQ(d.size(), 7u);
    EXPECT_EQ(girth(d), 4u);
}

TEST(Catalog, UnknownNamesAndBadParameters) {
    EXPECT_THROW(named("petersen"), std::invalid_argument);
    EXPECT_THROW(named("k_ladder", 0), std::invalid_argument);
    EXPECT_THROW(named("cycle", 2), std::invalid_argument);
    EXPECT_THROW(parse_pattern_name("x"), std::invalid_argument);
    EXPECT_THROW(parse_class_tag("x"), std::invalid_argument);
}

TEST(Recognition, FourCycleIsCocomparability) {
    const Graph c4 = catalog::cycle(4);
    const CocompRecognition r = is_cocomparability(c4);
    EXPECT_TRUE(r.cocomparability);
    ASSERT_TRUE(r.witness.has_value());
    EXPECT_TRUE(is_umbrella_free(c4, *r.witness).passed());
    EXPECT_TRUE(cocomp_oracle(c4));
}

TEST(Recognition, FiveCycleIsNot) {
    const Graph c5 = catalog::cycle(5);
    const CocompRecognition r = is_cocomparability(c5);
    EXPECT_FALSE(r.cocomparability);
    EXPECT_FALSE(r.witness.has_value());
    EXPECT_EQ(r.sweeps, 6u);
    EXPECT_FALSE(cocomp_oracle(c5, OracleMode::OrderingScan));
    EXPECT_FALSE(cocomp_oracle(c5, OracleMode::OrientationScan));
}

TEST(Recognition, LadderAndP2P3Bar) {
    EXPECT_TRUE(is_cocomparability(catalog::k_ladder(2)).cocomparability);
    EXPECT_TRUE(cocomp_oracle(catalog::k_ladder(2)));
    EXPECT_TRUE(cocomp_oracle(catalog::p2p3bar()));
    EXPECT_TRUE(is_cocomparability(catalog::p2p3bar()).cocomparability);
}

TEST(Recognition, EmptyAndTinyGraphs) {
    EXPECT_TRUE(is_cocomparability(Graph(0)).cocomparability);
    EXPECT_TRUE(is_cocomparability(Graph(1)).cocomparability);
    EXPECT_TRUE(cocomp_oracle(Graph(0)));
}

TEST(Recognition, AgreesWithOraclesExhaustivelyToFiveVertices) {
    for (std::size_t n = 0; n <= 5; ++n) {
        oracle::for_each_graph(n, [](const Graph& g) {
            const bool expected = oracle::cocomparability(g);
            ASSERT_EQ(is_cocomparability(g).cocomparability, expected);
            ASSERT_EQ(cocomp_oracle(g, OracleMode::OrderingScan), expected);
            ASSERT_EQ(cocomp_oracle(g, OracleMode::OrientationScan), expected);
        });
    }
}

TEST(Recognition, AgreesWithOraclesOnRandomGraphs) {
    std::mt19937_64 rng(79);
    std::size_t positives = 0;
    for (int t = 0; t < 1000; ++t) {
        const std::size_t n = 1 + t % 9;
        const Graph g = oracle::random_graph(n, 0.3 + 0.1 * (t % 5), rng);
        const bool by_orderings = cocomp_oracle(g, OracleMode::OrderingScan);
        const CocompRecognition r = is_cocomparability(g);
        ASSERT_EQ(r.cocomparability, by_orderings);
        if (r.witness) {
            ASSERT_TRUE(is_umbrella_free(g, *r.witness).passed());
        }
        if (complement(g).size() <= kOrientationScanLimit) {
            ASSERT_EQ(cocomp_oracle(g, OracleMode::OrientationScan), by_orderings);
        }
        positives += by_orderings;
    }
    EXPECT_GT(positives, 100u);
    EXPECT_LT(positives, 1000u);
}

TEST(Recognition, OracleGuards) {
    EXPECT_THROW(cocomp_oracle(catalog::path(10), OracleMode::OrderingScan), SizeLimitError);
    EXPECT_THROW(cocomp_oracle(Graph(8), OracleMode::OrientationScan), SizeLimitError);
}

TEST(PatternFree, Examples) {
    EXPECT_TRUE(pattern_free(catalog::complete(4), "diamond").free);
    const PatternCheck d = pattern_free(k4_minus_edge(), PatternName::Diamond);
    EXPECT_FALSE(d.free);
    EXPECT_EQ(d.embedding->image, (std::vector<Vertex>{0, 1, 2, 3}));
    EXPECT_TRUE(pattern_free(catalog::cycle(6), PatternName::Domino).free);
    EXPECT_FALSE(pattern_free(catalog::domino(), PatternName::Domino).free);
}

TEST(Interval, Examples) {
    for (std::size_t k = 1; k <= 8; ++k) EXPECT_TRUE(is_interval(catalog::path(k)));
    EXPECT_FALSE(is_interval(catalog::cycle(4)));
    EXPECT_FALSE(is_interval(catalog::cycle(5)));
    for (std::uint64_t seed = 0; seed < 100; ++seed) {
        EXPECT_TRUE(is_interval(gen_interval(1 + seed % 25, seed).graph));
    }
}

TEST(Interval, ModelsBuildExpectedGraphs) {
    const IntervalModel nested{{0, 10}, {1, 9}, {2, 8}};
    EXPECT_EQ(interval_graph(nested), catalog::complete(3));
    const IntervalModel disjoint{{0, 1}, {2, 3}};
    EXPECT_EQ(interval_graph(disjoint), Graph(2));
    const IntervalModel touching{{0, 1}, {1, 2}};
    EXPECT_EQ(interval_graph(touching).size(), 1u);
}

TEST(Classify, Examples) {
    using T = ClassTag;
    EXPECT_EQ(classify(catalog::cycle(4)).tags,
              tags({T::Cocomparability, T::P2P3BarFree, T::DiamondFree, T::GirthAtLeast4,
                    T::P2P3BarFreeCocomp}));
    EXPECT_EQ(classify(catalog::complete(3)).tags,
              tags({T::Cocomparability, T::P2P3BarFree, T::DiamondFree, T::Interval,
                    T::P2P3BarFreeCocomp}));
    const Classification c5 = classify(catalog::cycle(5));
    EXPECT_EQ(c5.tags, tags({T::P2P3BarFree, T::DiamondFree, T::GirthAtLeast4}));
    EXPECT_EQ(c5.girth, 5u);
    EXPECT_FALSE(c5.cocomp_witness.has_value());
    EXPECT_FALSE(classify(k4_minus_edge()).has(T::DiamondFree));
}

TEST(Classify, TagsMatchSeparateDetectors) {
    std::mt19937_64 rng(83);
    for (int t = 0; t < 200; ++t) {
        const Graph g = oracle::random_graph(1 + t % 10, 0.5, rng);
        const Classification c = classify(g);
        for (ClassTag tag : kAllClassTags) ASSERT_EQ(c.has(tag), has_class(g, tag));
        ASSERT_EQ(parse_class_tag(to_string(ClassTag::GirthAtLeast4)), ClassTag::GirthAtLeast4);
    }
}

TEST(Generators, PosetExtremes) {
    const ClassSample chain = gen_poset_cocomp(7, 1.0, 3);
    EXPECT_EQ(chain.graph, Graph(7));
    const ClassSample antichain = gen_poset_cocomp(7, 0.0, 3);
    EXPECT_EQ(antichain.graph, catalog::complete(7));
    EXPECT_TRUE(is_umbrella_free(antichain.graph, std::get<Ordering>(antichain.witness)).passed());
    EXPECT_THROW(gen_poset_cocomp(3, 1.5, 0), std::invalid_argument);
}

TEST(Generators, PosetIsTransitiveAndAcyclic) {
    for (std::uint64_t seed = 0; seed < 50; ++seed) {
        const PosetSpec poset = random_poset(12, 0.25, seed);
        std::set<Edge> rel(poset.relation.begin(), poset.relation.end());
        for (const auto& [a, b] : rel) {
            ASSERT_NE(a, b);
            ASSERT_FALSE(rel.count({b, a}));
            for (const auto& [c, d] : rel) {
                if (c == b) {
                    ASSERT_TRUE(rel.count({a, d}));
                }
            }
        }
    }
}

TEST(Generators, PosetWitnessesAreCocomparabilityOrderings) {
    const ClassSample s = gen_poset_cocomp(10, 0.3, 42);
    EXPECT_TRUE(is_umbrella_free(s.graph, std::get<Ordering>(s.witness)).passed());
    for (std::uint64_t seed = 0; seed < 300; ++seed) {
        const ClassSample r = gen_poset_cocomp(1 + seed % 9, 0.1 + 0.1 * (seed % 8), seed);
        ASSERT_TRUE(is_umbrella_free(r.graph, std::get<Ordering>(r.witness)).passed());
        ASSERT_TRUE(cocomp_oracle(r.graph));
    }
}

TEST(Generators, IntervalSamples) {
    const ClassSample s = gen_interval(20, 7);
    EXPECT_TRUE(is_interval(s.graph));
    EXPECT_TRUE(pattern_free(s.graph, PatternName::C4).free);
    const auto& model = std::get<IntervalModel>(s.witness);
    EXPECT_EQ(interval_graph(model), s.graph);
    EXPECT_TRUE(is_umbrella_free(s.graph, left_endpoint_order(model)).passed());
}

TEST(Generators, Deterministic) {
    EXPECT_EQ(gen_poset_cocomp(15, 0.3, 5).graph, gen_poset_cocomp(15, 0.3, 5).graph);
    EXPECT_EQ(gen_interval(15, 5).graph, gen_interval(15, 5).graph);
    EXPECT_NE(gen_interval(15, 5).graph, gen_interval(15, 6).graph);
}

TEST(Rejection, Examples) {
    const ClassSample a = gen_rejection(8, 0.5, 1, ClassTag::P2P3BarFree, 1000);
    EXPECT_TRUE(classify(a.graph).has(ClassTag::P2P3BarFreeCocomp));
    const ClassSample b = gen_rejection(2, 0.3, 1, ClassTag::Cocomparability, 1);
    EXPECT_EQ(b.graph.order(), 2u);
    const ClassSample c = gen_rejection(8, 0.8, 1, ClassTag::GirthAtLeast4, 1000);
    EXPECT_GE(girth(c.graph), 4u);
    EXPECT_TRUE(pattern_free(c.graph, PatternName::Triangle).free);
    EXPECT_TRUE(is_umbrella_free(c.graph, std::get<Ordering>(c.witness)).passed());
}

TEST(Rejection, BudgetExhaustion) {
    try {
        gen_rejection(12, 0.0, 1, ClassTag::GirthAtLeast4, 25);
        FAIL() << "K12 has triangles";
    } catch (const RejectionBudgetExhausted& e) {
        EXPECT_EQ(e.draws(), 25u);
    }
}
