#include <ngw/canonical.hpp>
#include <ngw/embedding.hpp>
#include <ngw/graph.hpp>
#include <ngw/graph6.hpp>

#include "test_support.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace ngw;
using namespace ngw::testing;

TEST(MakeGraph, StandardFamilies)
{
    EXPECT_EQ(make_graph(GraphFamily::complete(4)).edge_count(), 6);

    const Graph k33 = make_graph(GraphFamily::complete_bipartite(3, 3));
    EXPECT_EQ(k33.edge_count(), 9);
    for (int a = 0; a < 3; ++a)
        for (int b = 3; b < 6; ++b)
            EXPECT_TRUE(k33.has_edge(a, b));
    EXPECT_FALSE(k33.has_edge(0, 1));
    EXPECT_FALSE(k33.has_edge(3, 5));

    const Graph p5 = make_graph(GraphFamily::path(5));
    EXPECT_EQ(p5.edge_count(), 4);
    for (int i = 0; i < 4; ++i)
        EXPECT_TRUE(p5.has_edge(i, i + 1));

    EXPECT_EQ(make_graph(GraphFamily::cycle(6)).edge_count(), 6);
    EXPECT_EQ(make_graph(GraphFamily::star(4)).degree(0), 4);
    EXPECT_TRUE(make_graph(GraphFamily::empty(7)).edgeless());
    EXPECT_EQ(petersen_graph().edge_count(), 15);
}

TEST(MakeGraph, RejectsBadParameters)
{
    EXPECT_THROW(make_graph(GraphFamily::complete(17)), CapacityError);
    EXPECT_THROW(make_graph(GraphFamily::complete_bipartite(9, 8)), CapacityError);
    EXPECT_THROW(make_graph(GraphFamily::complete(0)), DomainError);
    EXPECT_THROW(make_graph(GraphFamily::complete_bipartite(2, 0)), DomainError);
    EXPECT_THROW(Graph(0), CapacityError);
    Graph g(3);
    EXPECT_THROW(g.add_edge(1, 1), DomainError);
    EXPECT_THROW(g.add_edge(0, 3), DomainError);
    EXPECT_THROW(EdgeId(2, 2), DomainError);
}

TEST(EdgeIdTest, ColexIndexRoundTrip)
{
    EXPECT_EQ(EdgeId(0, 1).index(), 0);
    EXPECT_EQ(EdgeId(2, 0).index(), 1);
    EXPECT_EQ(EdgeId(1, 2).index(), 2);
    EXPECT_EQ(EdgeId(0, 3).index(), 3);
    for (int e = 0; e < pair_count(16); ++e)
        EXPECT_EQ(EdgeId::from_index(e).index(), e);
}

TEST(Complement, CompleteBecomesEmpty)
{
    EXPECT_TRUE(complement(make_graph(GraphFamily::complete(4))).edgeless());
}

TEST(Complement, InvolutionOnAllSmallGraphs)
{
    for (int n = 1; n <= 5; ++n)
        for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << pair_count(n)); ++mask) {
            const Graph g = graph_from_mask(n, mask);
            const Graph c = complement(g);
            ASSERT_TRUE(c.is_well_formed());
            ASSERT_EQ(complement(c), g);
            ASSERT_EQ(mask_of(c), mask ^ ((std::uint64_t{1} << pair_count(n)) - 1));
        }
}

TEST(Complement, InvolutionOnRandomGraphs)
{
    std::mt19937_64 rng(1);
    for (int trial = 0; trial < 10000; ++trial) {
        const Graph g = random_graph(1 + trial % 8, 0.5, rng);
        ASSERT_EQ(complement(complement(g)), g);
    }
}

TEST(Complement, FiveCycleComplementIsFiveCycle)
{
    const Graph c = complement(make_graph(GraphFamily::cycle(5)));
    EXPECT_EQ(c.edge_count(), 5);
    for (int v = 0; v < 5; ++v)
        EXPECT_EQ(c.degree(v), 2);
    EXPECT_EQ(canonical_code(c), canonical_code(make_graph(GraphFamily::cycle(5))));
}

TEST(InducedSubgraph, Examples)
{
    EXPECT_EQ(induced_subgraph(make_graph(GraphFamily::complete(5)), 0b10101U),
              make_graph(GraphFamily::complete(3)));
    EXPECT_EQ(induced_subgraph(make_graph(GraphFamily::path(4)), 0b1001U),
              make_graph(GraphFamily::empty(2)));

    // {0,1,3,4} in K_{3,3}: 0-3, 0-4, 1-3, 1-4, relabelled 0,1,2,3.
    Graph c4(4);
    c4.add_edge(0, 2);
    c4.add_edge(0, 3);
    c4.add_edge(1, 2);
    c4.add_edge(1, 3);
    EXPECT_EQ(induced_subgraph(make_graph(GraphFamily::complete_bipartite(3, 3)), 0b11011U), c4);
    EXPECT_THROW(induced_subgraph(c4, 0), DomainError);
}

TEST(Graph6, KnownStrings)
{
    EXPECT_EQ(graph6_emit(make_graph(GraphFamily::complete(3))), "Bw");
    EXPECT_EQ(graph6_parse("B?"), make_graph(GraphFamily::empty(3)));
    EXPECT_EQ(graph6_parse(">>graph6<<Bw\n"), make_graph(GraphFamily::complete(3)));
    EXPECT_EQ(graph6_emit(make_graph(GraphFamily::empty(1))), "@");
    // Petersen graph as printed by standard tools in this labelling.
    EXPECT_EQ(graph6_parse(graph6_emit(petersen_graph())), petersen_graph());
}

TEST(Graph6, RoundTripAllSmallGraphs)
{
    for (int n = 1; n <= 5; ++n)
        for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << pair_count(n)); ++mask) {
            const Graph g = graph_from_mask(n, mask);
            ASSERT_EQ(graph6_parse(graph6_emit(g)), g);
        }
}

TEST(Graph6, RoundTripRandomTwelve)
{
    std::mt19937_64 rng(2);
    for (int trial = 0; trial < 1000; ++trial) {
        const Graph g = random_graph(12, 0.5, rng);
        ASSERT_EQ(graph6_parse(graph6_emit(g)), g);
    }
    const Graph g9 = random_graph(9, 0.5, rng);
    EXPECT_EQ(graph6_parse(graph6_emit(g9)), g9);
}

TEST(Graph6, MalformedInput)
{
    EXPECT_THROW(graph6_parse(""), ParseError);
    EXPECT_THROW(graph6_parse("?"), ParseError);
    EXPECT_THROW(graph6_parse("B"), ParseError);
    EXPECT_THROW(graph6_parse("Bww"), ParseError);
    EXPECT_THROW(graph6_parse("Bx"), ParseError);  // padding bit set
    EXPECT_THROW(graph6_parse("C\x01"), ParseError);
    EXPECT_THROW(graph6_parse("Q?????????????????????????"), CapacityError);
    try {
        graph6_parse("Dw!");
        FAIL();
    } catch (const ParseError& e) {
        EXPECT_EQ(e.offset(), 2U);
    }
}

TEST(Embedding, Examples)
{
    EXPECT_TRUE(embeds_as_spanning_subgraph(make_graph(GraphFamily::path(4)),
                                            make_graph(GraphFamily::cycle(4))));
    EXPECT_FALSE(embeds_as_spanning_subgraph(make_graph(GraphFamily::star(3)),
                                             make_graph(GraphFamily::path(4))));
    EXPECT_TRUE(embeds_as_spanning_subgraph(make_graph(GraphFamily::cycle(4)),
                                            make_graph(GraphFamily::complete_bipartite(2, 2))));
    EXPECT_THROW(embeds_as_spanning_subgraph(make_graph(GraphFamily::path(3)),
                                             make_graph(GraphFamily::path(4))),
                 DomainError);
}

// Brute force over all bijections on five vertices.
TEST(Embedding, MatchesBruteForce)
{
    std::mt19937_64 rng(3);
    for (int trial = 0; trial < 400; ++trial) {
        const Graph pattern = random_graph(5, 0.4, rng);
        const Graph host = random_graph(5, 0.6, rng);
        std::vector<int> perm{0, 1, 2, 3, 4};
        bool expected = false;
        do {
            bool ok = true;
            for (const EdgeId& e : pattern.edges())
                ok = ok && host.has_edge(perm[e.i], perm[e.j]);
            expected = expected || ok;
        } while (!expected && std::next_permutation(perm.begin(), perm.end()));
        ASSERT_EQ(embeds_as_spanning_subgraph(pattern, host), expected);
    }
}

TEST(GraphInvariants, GeneratedGraphsAreWellFormed)
{
    std::mt19937_64 rng(4);
    for (int trial = 0; trial < 1000; ++trial)
        ASSERT_TRUE(random_graph(1 + trial % 16, 0.5, rng).is_well_formed());
    EXPECT_TRUE(petersen_graph().is_well_formed());
}
