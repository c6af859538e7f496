#include <gtest/gtest.h>

#include <gsearch/equivalence.hpp>
#include <gsearch/named_graphs.hpp>

#include "support/example_graphs.hpp"
#include "support/oracles.hpp"

using namespace gsearch;

namespace {

// Subset relation straight from the permutation filter.
bool filter_subset(const Graph& g, SearchKind x, SearchKind y) {
    for (auto& p : oracle::all_permutations(g.order()))
        if (oracle::accepts(g, p, x) && !oracle::accepts(g, p, y)) return false;
    return true;
}

} // namespace

TEST(Equivalence, PawBfsNotLexBfs) {
    const auto r = orderings_subset(cases::paw(), SearchKind::BFS, SearchKind::LexBFS);
    EXPECT_FALSE(r.verdict);
    ASSERT_TRUE(r.witness);
    EXPECT_EQ(r.witness->ordering, (VertexOrdering{2, 0, 3, 1}));
    EXPECT_EQ(r.witness->valid_for, SearchKind::BFS);
    EXPECT_EQ(r.witness->invalid_for, SearchKind::LexBFS);
    EXPECT_TRUE(r.witness->failure.violation.has_value());
}

TEST(Equivalence, Examples) {
    EXPECT_TRUE(orderings_subset(named::cycle(6), SearchKind::DFS, SearchKind::LexDFS).verdict);
    EXPECT_TRUE(orderings_equal(named::star(3), SearchKind::BFS, SearchKind::DFS).verdict);
    const auto p4 = orderings_equal(named::path(4), SearchKind::BFS, SearchKind::DFS);
    EXPECT_FALSE(p4.verdict);
    ASSERT_TRUE(p4.witness);
    EXPECT_TRUE(oracle::accepts(named::path(4), p4.witness->ordering.sequence(), p4.witness->valid_for));
    EXPECT_FALSE(oracle::accepts(named::path(4), p4.witness->ordering.sequence(), p4.witness->invalid_for));
    EXPECT_TRUE(orderings_equal(named::cycle(4), SearchKind::Generic, SearchKind::MNS).verdict);
}

TEST(Equivalence, Guards) {
    EXPECT_THROW(orderings_subset(named::path(9), SearchKind::BFS, SearchKind::DFS), SizeLimitError);
    EquivalenceOptions big;
    big.allow_large = true;
    EXPECT_TRUE(orderings_subset(named::path(9), SearchKind::LexBFS, SearchKind::BFS, big).verdict);
    EXPECT_THROW(orderings_subset(Graph(3, {{0, 1}}), SearchKind::BFS, SearchKind::DFS), DisconnectedGraphError);
}

TEST(Equivalence, TruncationIsReported) {
    EquivalenceOptions opt;
    opt.cap = 3;
    const auto r = orderings_subset(named::complete(4), SearchKind::Generic, SearchKind::BFS, opt);
    EXPECT_TRUE(r.truncated);
    const auto t = check_theorem(named::complete(4), Theorem::A, opt);
    EXPECT_FALSE(t.consistent);
}

TEST(Theorems, StarIsInEveryClass) {
    for (Theorem t : kAllTheorems) {
        const auto r = check_theorem(named::star(3), t);
        EXPECT_TRUE(r.structural_prediction) << to_string(t);
        EXPECT_TRUE(r.forbidden_free);
        EXPECT_TRUE(r.consistent);
        for (const auto& item : r.items) EXPECT_TRUE(item.report.verdict) << describe(item);
    }
}

TEST(Theorems, SixPanOutsideClassB) {
    const auto r = check_theorem(named::pan(6), Theorem::B);
    EXPECT_FALSE(r.structural_prediction);
    ASSERT_TRUE(r.obstruction);
    EXPECT_EQ(r.obstruction->pattern, Pattern::KPan);
    EXPECT_EQ(r.obstruction->k, 6);
    EXPECT_TRUE(r.consistent);
    ASSERT_EQ(r.items.size(), 3U);
    for (const auto& item : r.items) EXPECT_FALSE(item.report.verdict) << describe(item);
}

TEST(Theorems, PathOutsideClassC) {
    const auto r = check_theorem(named::path(4), Theorem::C);
    EXPECT_FALSE(r.structural_prediction);
    EXPECT_TRUE(r.consistent);
    ASSERT_EQ(r.items.size(), 2U);
    EXPECT_EQ(r.items[0].label, "C2");
    EXPECT_EQ(r.items[0].report.witness->ordering, (VertexOrdering{1, 2, 0, 3}));
    EXPECT_EQ(r.items[1].report.witness->ordering, (VertexOrdering{1, 2, 3, 0}));
    EXPECT_EQ(describe(r.items[0]), "C2 MNS subset LexDFS");
}

TEST(Theorems, Parsing) {
    EXPECT_EQ(parse_theorem("b"), Theorem::B);
    EXPECT_EQ(parse_theorem("corollary"), Theorem::CorollaryA5A6);
    EXPECT_THROW(parse_theorem("D"), InvalidArgumentError);
}

TEST(MnsNotMcs, Examples) {
    const Graph four_pan = cases::mns_not_mcs_cases()[2].graph;
    const auto w = find_mns_not_mcs(four_pan);
    ASSERT_TRUE(w);
    EXPECT_TRUE(oracle::accepts(four_pan, w->sequence(), SearchKind::MNS));
    EXPECT_FALSE(oracle::accepts(four_pan, w->sequence(), SearchKind::MCS));
    EXPECT_FALSE(find_mns_not_mcs(named::complete(4)));
    EXPECT_FALSE(find_mns_not_mcs(named::star(3)));
}

// Every relation the library decides matches the permutation filter.
TEST(Equivalence, AgreesWithPermutationFilterUpToFiveVertices) {
    const auto inv = oracle::load_inventory("connected_upto7.g6", 5);
    for (const Graph& g : inv.graphs)
        for (SearchKind x : kAllSearchKinds)
            for (SearchKind y : kAllSearchKinds)
                ASSERT_EQ(orderings_subset(g, x, y).verdict, filter_subset(g, x, y))
                    << emit_graph6(g) << " " << to_string(x) << " " << to_string(y);
}

// Class sizes among the 996 connected graphs on 1..7 vertices: 12 stars or
// cliques; 39 trees, cycles, cliques or complete bipartite graphs; 85
// trivially perfect graphs (1, 1, 2, 4, 9, 20, 48 by order).
TEST(Theorems, ClassSizesOnInventory) {
    const auto inv = oracle::load_inventory("connected_upto7.g6");
    int in_a = 0, in_b = 0, in_c = 0;
    for (const Graph& g : inv.graphs) {
        const auto a = check_theorem(g, Theorem::A), b = check_theorem(g, Theorem::B), c = check_theorem(g, Theorem::C);
        EXPECT_TRUE(a.consistent && b.consistent && c.consistent) << emit_graph6(g);
        in_a += a.structural_prediction;
        in_b += b.structural_prediction;
        in_c += c.structural_prediction;
    }
    EXPECT_EQ(in_a, 12);
    EXPECT_EQ(in_b, 39);
    EXPECT_EQ(in_c, 85);
}
