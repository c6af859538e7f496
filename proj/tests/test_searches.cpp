#include <gtest/gtest.h>

#include <algorithm>
#include <set>

#include <gsearch/named_graphs.hpp>
#include <gsearch/searches.hpp>
#include <gsearch/validators.hpp>

#include "support/example_graphs.hpp"
#include "support/oracles.hpp"

using namespace gsearch;
using cases::a;
using cases::b;
using cases::c;
using cases::d;

namespace {

std::vector<std::vector<Vertex>> as_vectors(const Enumeration& e) {
    std::vector<std::vector<Vertex>> out;
    for (const auto& o : e.orderings) out.push_back(o.sequence());
    return out;
}

VertexSet set_of(std::initializer_list<Vertex> vs) {
    VertexSet s = 0;
    for (Vertex v : vs) s |= singleton(v);
    return s;
}

} // namespace

TEST(SearchKind, Parsing) {
    EXPECT_EQ(parse_search_kind("lexbfs"), SearchKind::LexBFS);
    EXPECT_EQ(parse_search_kind("LDFS"), SearchKind::LexDFS);
    EXPECT_EQ(parse_search_kind("mcs"), SearchKind::MCS);
    EXPECT_THROW(parse_search_kind("dijkstra"), InvalidArgumentError);
    for (SearchKind k : kAllSearchKinds) EXPECT_EQ(parse_search_kind(to_string(k)), k);
}

TEST(SearchState, VisitAndUndo) {
    const Graph g = named::path(4);
    SearchState s(g);
    s.visit(1);
    s.visit(2);
    EXPECT_EQ(s.label(0), PositionSet{1});
    EXPECT_EQ(s.label(3), PositionSet{2});
    EXPECT_EQ(s.neighborhood_label(3), singleton(2));
    EXPECT_THROW(s.visit(2), InvalidArgumentError);
    EXPECT_THROW(s.visit(7), InvalidArgumentError);
    s.undo();
    EXPECT_EQ(s.label(3), PositionSet{0});
    EXPECT_EQ(s.position(2), -1);
}

TEST(Candidates, MnsOnPathAfterMiddleVertices) {
    const Graph g = named::path(4);
    const std::vector<Vertex> prefix{1, 2};
    const auto s = SearchState::from_prefix(g, prefix);
    EXPECT_EQ(candidates(g, SearchKind::MNS, s), set_of({0, 3}));
    EXPECT_EQ(candidates(g, SearchKind::LexBFS, s), set_of({0}));
    EXPECT_EQ(candidates(g, SearchKind::LexDFS, s), set_of({3}));
    EXPECT_EQ(candidates(g, SearchKind::BFS, s), set_of({0}));
    EXPECT_EQ(candidates(g, SearchKind::DFS, s), set_of({3}));
    EXPECT_EQ(candidates(g, SearchKind::MCS, s), set_of({0, 3}));
    EXPECT_EQ(candidates(g, SearchKind::Generic, s), set_of({0, 3}));
}

TEST(Candidates, CompleteGraphAllowsEverything) {
    const Graph g = named::complete(4);
    const std::vector<Vertex> prefix{2};
    const auto s = SearchState::from_prefix(g, prefix);
    for (SearchKind k : kAllSearchKinds) EXPECT_EQ(candidates(g, k, s), set_of({0, 1, 3})) << to_string(k);
    EXPECT_EQ(candidates(g, SearchKind::BFS, SearchState(g)), g.vertices());
}

TEST(Candidates, PawLexBfs) {
    const Graph g = cases::paw();
    const std::vector<Vertex> prefix{c, a};
    const auto s = SearchState::from_prefix(g, prefix);
    EXPECT_EQ(candidates(g, SearchKind::LexBFS, s), set_of({b}));
    EXPECT_EQ(candidates(g, SearchKind::BFS, s), set_of({b, d}));
}

TEST(Candidates, Errors) {
    const Graph g = named::path(3);
    const Graph h = named::complete(3);
    SearchState s(h);
    EXPECT_THROW(candidates(g, SearchKind::BFS, s), InternalStateError);
    const Graph split(3, {{0, 1}});
    const std::vector<Vertex> prefix{0, 1};
    EXPECT_THROW(candidates(split, SearchKind::BFS, SearchState::from_prefix(split, prefix)),
                 DisconnectedGraphError);
}

TEST(RunSearch, DeterministicExamples) {
    const Graph p4 = named::path(4);
    EXPECT_EQ(run_search(p4, SearchKind::BFS, TieBreak::min_index(), 1), (VertexOrdering{1, 0, 2, 3}));
    EXPECT_EQ(run_search(p4, SearchKind::DFS, TieBreak::min_index(), 1), (VertexOrdering{1, 0, 2, 3}));
    EXPECT_EQ(run_search(p4, SearchKind::LexDFS, TieBreak::max_index(), 1), (VertexOrdering{1, 2, 3, 0}));
    EXPECT_EQ(run_search(named::star(3), SearchKind::BFS, TieBreak::max_index()), (VertexOrdering{3, 0, 2, 1}));
    EXPECT_EQ(run_search(named::cycle(5), SearchKind::LexBFS, TieBreak::min_index()),
              (VertexOrdering{0, 1, 4, 2, 3}));
}

TEST(RunSearch, SeededIsReproducibleAndValid) {
    const Graph g = named::pan(5);
    for (SearchKind k : kAllSearchKinds)
        for (std::uint64_t seed = 0; seed < 20; ++seed) {
            const auto o1 = run_search(g, k, TieBreak::seeded(seed));
            EXPECT_EQ(o1, run_search(g, k, TieBreak::seeded(seed)));
            EXPECT_TRUE(oracle::accepts(g, o1.sequence(), k)) << to_string(k) << " seed " << seed;
        }
}

TEST(RunSearch, Errors) {
    EXPECT_THROW(run_search(Graph(0), SearchKind::BFS, TieBreak::min_index()), InvalidArgumentError);
    EXPECT_THROW(run_search(named::path(3), SearchKind::BFS, TieBreak::min_index(), 5), InvalidArgumentError);
    EXPECT_THROW(run_search(Graph(3, {{0, 1}}), SearchKind::BFS, TieBreak::min_index()), DisconnectedGraphError);
    EXPECT_EQ(run_search(Graph(1), SearchKind::MCS, TieBreak::min_index()), (VertexOrdering{0}));
}

TEST(Enumerate, TriangleAllKinds) {
    for (SearchKind k : kAllSearchKinds) {
        const auto e = enumerate_orderings(named::complete(3), k);
        EXPECT_EQ(e.orderings.size(), 6U) << to_string(k);
        EXPECT_FALSE(e.truncated);
    }
}

TEST(Enumerate, PathOnThreeBfs) {
    const auto e = enumerate_orderings(named::path(3), SearchKind::BFS);
    const std::vector<std::vector<Vertex>> expected{{0, 1, 2}, {1, 0, 2}, {1, 2, 0}, {2, 1, 0}};
    EXPECT_EQ(as_vectors(e), expected);
}

TEST(Enumerate, StarGenericMatchesPermutationFilter) {
    const Graph g = named::star(3);
    const auto e = enumerate_orderings(g, SearchKind::Generic);
    EXPECT_EQ(e.orderings.size(), 12U);
    EXPECT_EQ(as_vectors(e), oracle::filter_permutations(g, SearchKind::Generic));
}

TEST(Enumerate, CapAndTruncation) {
    const Graph g = named::complete(4);
    EXPECT_THROW(enumerate_orderings(g, SearchKind::BFS, 0), InvalidArgumentError);
    const auto cut = enumerate_orderings(g, SearchKind::BFS, 5);
    EXPECT_EQ(cut.orderings.size(), 5U);
    EXPECT_TRUE(cut.truncated);
    const auto exact = enumerate_orderings(g, SearchKind::BFS, 24);
    EXPECT_EQ(exact.orderings.size(), 24U);
    EXPECT_FALSE(exact.truncated);
    EXPECT_THROW(enumerate_orderings(Graph(2), SearchKind::BFS), DisconnectedGraphError);
}

// Every enumerated ordering is accepted by the literal definitions, and every
// accepted permutation is enumerated.
TEST(Enumerate, SoundAndCompleteUpToFiveVertices) {
    const auto inv = oracle::load_inventory("connected_upto7.g6", 5);
    for (const Graph& g : inv.graphs)
        for (SearchKind k : kAllSearchKinds)
            ASSERT_EQ(as_vectors(enumerate_orderings(g, k)), oracle::filter_permutations(g, k))
                << emit_graph6(g) << " " << to_string(k);
}

TEST(Enumerate, HierarchyUpToSixVertices) {
    const auto inv = oracle::load_inventory("connected_upto7.g6", 6);
    auto set = [](const Graph& g, SearchKind k) {
        const auto e = enumerate_orderings(g, k);
        return std::set<VertexOrdering>(e.orderings.begin(), e.orderings.end());
    };
    auto subset = [](const auto& x, const auto& y) { return std::includes(y.begin(), y.end(), x.begin(), x.end()); };
    for (const Graph& g : inv.graphs) {
        const auto gen = set(g, SearchKind::Generic), bfs = set(g, SearchKind::BFS), dfs = set(g, SearchKind::DFS);
        const auto lbfs = set(g, SearchKind::LexBFS), ldfs = set(g, SearchKind::LexDFS);
        const auto mns = set(g, SearchKind::MNS), mcs = set(g, SearchKind::MCS);
        EXPECT_TRUE(subset(lbfs, bfs) && subset(lbfs, mns));
        EXPECT_TRUE(subset(ldfs, dfs) && subset(ldfs, mns));
        EXPECT_TRUE(subset(mcs, mns));
        EXPECT_TRUE(subset(bfs, gen) && subset(dfs, gen) && subset(mns, gen));
    }
}
