#include <gtest/gtest.h>

#include <random>

#include <lexsweep/classes.hpp>
#include <lexsweep/graph.hpp>

#include "oracles.hpp"

using namespace lexsweep;

namespace {

Graph c4() { return Graph::from_edge_list(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}}); }

bool same_edges(const Graph& g, std::vector<Edge> expected) {
    std::sort(expected.begin(), expected.end());
    return g.edges() == expected;
}

}  // namespace

TEST(FromEdgeList, BuildsCycle) {
    const Graph g = c4();
    EXPECT_EQ(g.order(), 4u);
    EXPECT_EQ(g.size(), 4u);
    EXPECT_TRUE(g.has_edge(3, 0));
    EXPECT_TRUE(g.has_edge(0, 3));
    EXPECT_FALSE(g.has_edge(0, 2));
}

TEST(FromEdgeList, EdgelessGraph) {
    const Graph g = Graph::from_edge_list(3, {});
    EXPECT_EQ(g.order(), 3u);
    EXPECT_EQ(g.size(), 0u);
    for (Vertex v = 0; v < 3; ++v) EXPECT_EQ(g.degree(v), 0u);
}

TEST(FromEdgeList, CollapsesDuplicates) {
    const Graph g = Graph::from_edge_list(2, {{0, 1}, {1, 0}});
    EXPECT_EQ(g.size(), 1u);
    EXPECT_EQ(g.neighbors(0).size(), 1u);
}

TEST(FromEdgeList, RejectsSelfLoop) {
    try {
        Graph::from_edge_list(3, {{0, 1}, {2, 2}});
        FAIL() << "self-loop accepted";
    } catch (const GraphError& e) {
        EXPECT_EQ(e.offending(), (Edge{2, 2}));
    }
}

TEST(FromEdgeList, RejectsOutOfRangeEndpoint) {
    EXPECT_THROW(Graph::from_edge_list(3, {{0, 3}}), GraphError);
    EXPECT_THROW(Graph::from_edge_list(0, {{0, 1}}), GraphError);
}

TEST(FromEdgeList, RowsAreSortedAndSymmetric) {
    std::mt19937_64 rng(5);
    for (int t = 0; t < 200; ++t) {
        const Graph g = oracle::random_graph(1 + t % 20, 0.3, rng);
        std::size_t degree_sum = 0;
        for (Vertex v = 0; v < g.order(); ++v) {
            auto row = g.neighbors(v);
            EXPECT_TRUE(std::is_sorted(row.begin(), row.end()));
            degree_sum += row.size();
            for (Vertex w : row) {
                EXPECT_NE(w, v);
                EXPECT_LT(w, g.order());
                EXPECT_TRUE(g.has_edge(w, v));
            }
        }
        EXPECT_EQ(degree_sum, 2 * g.size());
    }
}

TEST(Complement, CycleOfFourBecomesTwoEdges) {
    EXPECT_TRUE(same_edges(complement(c4()), {{0, 2}, {1, 3}}));
}

TEST(Complement, TriangleBecomesEdgeless) {
    const Graph g = complement(catalog::complete(3));
    EXPECT_EQ(g.order(), 3u);
    EXPECT_EQ(g.size(), 0u);
}

TEST(Complement, PathOnFourIsSelfComplementary) {
    const Graph p4 = catalog::path(4);
    const Graph co = complement(p4);
    EXPECT_TRUE(same_edges(co, {{0, 2}, {0, 3}, {1, 3}}));
    EXPECT_TRUE(oracle::isomorphic(p4, co));
}

TEST(Complement, IsAnInvolution) {
    for (std::size_t n = 0; n <= 5; ++n) {
        oracle::for_each_graph(n, [](const Graph& g) { EXPECT_EQ(complement(complement(g)), g); });
    }
}

TEST(InducedSubgraph, ThreeVerticesOfCycleGivePath) {
    const std::vector<Vertex> keep{0, 1, 2};
    const InducedSubgraph sub = induced_subgraph(c4(), keep);
    EXPECT_TRUE(same_edges(sub.graph, {{0, 1}, {1, 2}}));
    EXPECT_EQ(sub.host_ids, keep);
}

TEST(InducedSubgraph, EmptySet) {
    const InducedSubgraph sub = induced_subgraph(c4(), std::vector<Vertex>{});
    EXPECT_EQ(sub.graph.order(), 0u);
    EXPECT_TRUE(sub.host_ids.empty());
}

TEST(InducedSubgraph, AnyThreeOfCompleteGraph) {
    const Graph k4 = catalog::complete(4);
    for (Vertex skip = 0; skip < 4; ++skip) {
        std::vector<Vertex> keep;
        for (Vertex v = 0; v < 4; ++v) {
            if (v != skip) keep.push_back(v);
        }
        EXPECT_EQ(induced_subgraph(k4, keep).graph, catalog::complete(3));
    }
}

TEST(InducedSubgraph, UnsortedAndRepeatedIdsMapInAscendingOrder) {
    const InducedSubgraph sub = induced_subgraph(c4(), std::vector<Vertex>{3, 1, 3, 2});
    EXPECT_EQ(sub.host_ids, (std::vector<Vertex>{1, 2, 3}));
    EXPECT_TRUE(same_edges(sub.graph, {{0, 1}, {1, 2}}));
}

TEST(InducedSubgraph, RejectsForeignVertex) {
    EXPECT_THROW(induced_subgraph(c4(), std::vector<Vertex>{0, 4}), std::out_of_range);
}

TEST(InducedSubgraph, WholeVertexSetIsIdentity) {
    std::mt19937_64 rng(11);
    for (int t = 0; t < 50; ++t) {
        const Graph g = oracle::random_graph(t % 12, 0.4, rng);
        std::vector<Vertex> all(g.order());
        std::iota(all.begin(), all.end(), Vertex{0});
        const InducedSubgraph sub = induced_subgraph(g, all);
        EXPECT_EQ(sub.graph, g);
        EXPECT_EQ(sub.host_ids, all);
    }
}

TEST(Girth, Examples) {
    EXPECT_EQ(girth(c4()), 4u);
    EXPECT_EQ(girth(catalog::complete(4)), 3u);
    EXPECT_EQ(girth(catalog::path(6)), kInfiniteGirth);
    const Graph star = Graph::from_edge_list(5, {{0, 1}, {0, 2}, {0, 3}, {0, 4}});
    EXPECT_EQ(girth(star), kInfiniteGirth);
    EXPECT_EQ(girth(Graph(0)), kInfiniteGirth);
    EXPECT_EQ(girth(catalog::cycle(7)), 7u);
}

TEST(Girth, MatchesCycleEnumeration) {
    for (std::size_t n = 0; n <= 6; ++n) {
        oracle::for_each_graph(n, [](const Graph& g) { ASSERT_EQ(girth(g), oracle::girth(g)); });
    }
    std::mt19937_64 rng(3);
    for (int t = 0; t < 2000; ++t) {
        const Graph g = oracle::random_graph(7, 0.15 + 0.1 * (t % 5), rng);
        ASSERT_EQ(girth(g), oracle::girth(g));
    }
}
