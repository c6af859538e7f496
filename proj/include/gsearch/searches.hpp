#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <span>
#include <vector>

#include "graph.hpp"
#include "search_kind.hpp"

namespace gsearch {

/// Bit i set iff the vertex visited at step i belongs to the set.
using PositionSet = std::uint64_t;

/// Partial execution of a search: the visited prefix plus, for every vertex,
/// the steps at which its neighbors were visited. All seven selection rules
/// read their labels off that one position set:
///   BFS     earliest step (lowest bit)
///   LexBFS  steps compared earliest-first (bit-reversed integer order)
///   LexDFS  steps compared latest-first (integer order)
///   MNS     the set itself under inclusion
///   MCS     its cardinality
class SearchState {
public:
    explicit SearchState(const Graph& g)
        : graph_(&g),
          position_(static_cast<std::size_t>(g.order()), -1),
          labels_(static_cast<std::size_t>(g.order()), 0) {
        visited_.reserve(static_cast<std::size_t>(g.order()));
    }

    /// State after visiting `prefix` in order. No selection rule is checked.
    static SearchState from_prefix(const Graph& g, std::span<const Vertex> prefix) {
        SearchState s(g);
        for (Vertex v : prefix) s.visit(v);
        return s;
    }

    const Graph& graph() const noexcept { return *graph_; }
    std::span<const Vertex> visited() const noexcept { return visited_; }
    std::size_t size() const noexcept { return visited_.size(); }
    bool complete() const noexcept { return visited_.size() == position_.size(); }
    VertexSet visited_set() const noexcept { return visited_set_; }
    VertexSet unvisited() const noexcept { return graph_->vertices() & ~visited_set_; }
    bool is_visited(Vertex v) const { return contains(visited_set_, v); }

    /// Step at which `v` was visited, or -1.
    int position(Vertex v) const { return position_[static_cast<std::size_t>(v)]; }

    /// Steps at which neighbors of `v` were visited.
    PositionSet label(Vertex v) const { return labels_[static_cast<std::size_t>(v)]; }

    /// N(v) ∩ visited.
    VertexSet neighborhood_label(Vertex v) const { return graph_->neighbors(v) & visited_set_; }

    void visit(Vertex v) {
        if (!graph_->has_vertex(v))
            throw InvalidArgumentError("vertex " + std::to_string(v) + " is not in the graph");
        if (is_visited(v)) throw InvalidArgumentError("vertex " + std::to_string(v) + " already visited");
        const auto step = visited_.size();
        position_[static_cast<std::size_t>(v)] = static_cast<int>(step);
        visited_.push_back(v);
        visited_set_ |= singleton(v);
        for_each_member(graph_->neighbors(v),
                        [&](Vertex u) { labels_[static_cast<std::size_t>(u)] |= PositionSet{1} << step; });
    }

    /// Reverts the most recent visit.
    void undo() {
        const Vertex v = visited_.back();
        const auto step = visited_.size() - 1;
        visited_.pop_back();
        visited_set_ &= ~singleton(v);
        position_[static_cast<std::size_t>(v)] = -1;
        for_each_member(graph_->neighbors(v),
                        [&](Vertex u) { labels_[static_cast<std::size_t>(u)] &= ~(PositionSet{1} << step); });
    }

private:
    const Graph* graph_;
    std::vector<Vertex> visited_;
    std::vector<int> position_;
    std::vector<PositionSet> labels_;
    VertexSet visited_set_ = 0;
};

namespace detail {

constexpr std::uint64_t reverse_bits(std::uint64_t x) {
    x = ((x >> 1) & 0x5555555555555555ULL) | ((x & 0x5555555555555555ULL) << 1);
    x = ((x >> 2) & 0x3333333333333333ULL) | ((x & 0x3333333333333333ULL) << 2);
    x = ((x >> 4) & 0x0F0F0F0F0F0F0F0FULL) | ((x & 0x0F0F0F0F0F0F0F0FULL) << 4);
    x = ((x >> 8) & 0x00FF00FF00FF00FFULL) | ((x & 0x00FF00FF00FF00FFULL) << 8);
    x = ((x >> 16) & 0x0000FFFF0000FFFFULL) | ((x & 0x0000FFFF0000FFFFULL) << 16);
    return (x >> 32) | (x << 32);
}

/// Members of `pool` maximizing `key`.
template <class Key>
VertexSet argmax(VertexSet pool, Key&& key) {
    VertexSet best = 0;
    std::uint64_t best_key = 0;
    for_each_member(pool, [&](Vertex v) {
        const std::uint64_t k = key(v);
        if (best == 0 || k > best_key) {
            best = singleton(v);
            best_key = k;
        } else if (k == best_key) {
            best |= singleton(v);
        }
    });
    return best;
}

} // namespace detail

/// Vertices the search paradigm `kind` may visit next from `state`. Every
/// vertex is a candidate while nothing has been visited.
inline VertexSet candidates(const Graph& g, SearchKind kind, const SearchState& state) {
    if (&state.graph() != &g && !(state.graph() == g))
        throw InternalStateError("search state belongs to a different graph");
    const VertexSet unvisited = state.unvisited();
    if (state.size() == 0) return unvisited;

    VertexSet frontier = 0;
    for_each_member(unvisited, [&](Vertex v) {
        if (state.label(v) != 0) frontier |= singleton(v);
    });
    if (frontier == 0) {
        if (unvisited == 0) return 0;
        throw DisconnectedGraphError("no unvisited vertex has a visited neighbor; graph is disconnected");
    }

    switch (kind) {
    case SearchKind::Generic:
        return frontier;
    case SearchKind::BFS:
        // Negated so that the earliest discoverer has the largest key.
        return detail::argmax(frontier, [&](Vertex v) { return ~std::uint64_t{0} - std::countr_zero(state.label(v)); });
    case SearchKind::DFS: {
        const auto seq = state.visited();
        for (auto i = seq.size(); i-- > 0;)
            if (VertexSet s = g.neighbors(seq[i]) & unvisited; s != 0) return s;
        return 0;
    }
    case SearchKind::LexBFS:
        return detail::argmax(frontier, [&](Vertex v) { return detail::reverse_bits(state.label(v)); });
    case SearchKind::LexDFS:
        return detail::argmax(frontier, [&](Vertex v) { return state.label(v); });
    case SearchKind::MNS: {
        VertexSet out = 0;
        for_each_member(frontier, [&](Vertex v) {
            const PositionSet mine = state.label(v);
            bool dominated = false;
            for_each_member(frontier, [&](Vertex u) {
                const PositionSet other = state.label(u);
                if (other != mine && (other & mine) == mine) dominated = true;
            });
            if (!dominated) out |= singleton(v);
        });
        return out;
    }
    case SearchKind::MCS:
        return detail::argmax(frontier, [&](Vertex v) { return static_cast<std::uint64_t>(std::popcount(state.label(v))); });
    }
    return 0;
}

/// Resolves ties between candidates.
class TieBreak {
public:
    enum class Policy { MinIndex, MaxIndex, SeededRandom };

    static constexpr TieBreak min_index() { return TieBreak(Policy::MinIndex, 0); }
    static constexpr TieBreak max_index() { return TieBreak(Policy::MaxIndex, 0); }
    static constexpr TieBreak seeded(std::uint64_t seed) { return TieBreak(Policy::SeededRandom, seed); }

    constexpr Policy policy() const noexcept { return policy_; }
    constexpr std::uint64_t seed() const noexcept { return seed_; }

private:
    constexpr TieBreak(Policy p, std::uint64_t s) : policy_(p), seed_(s) {}
    Policy policy_;
    std::uint64_t seed_;
};

/// Runs one search. `start` fixes the first vertex; otherwise the tie-break
/// picks it among all vertices.
inline VertexOrdering run_search(const Graph& g, SearchKind kind, TieBreak tiebreak,
                                 std::optional<Vertex> start = std::nullopt) {
    if (g.order() == 0) throw InvalidArgumentError("cannot search a graph without vertices");
    if (start && !g.has_vertex(*start))
        throw InvalidArgumentError("start vertex " + std::to_string(*start) + " is not in the graph");
    require_connected(g);

    std::mt19937_64 rng(tiebreak.seed());
    auto choose = [&](VertexSet pool) -> Vertex {
        switch (tiebreak.policy()) {
        case TieBreak::Policy::MinIndex: return lowest(pool);
        case TieBreak::Policy::MaxIndex: return highest(pool);
        case TieBreak::Policy::SeededRandom: {
            // Modulo keeps the choice sequence identical across standard libraries.
            const auto all = members(pool);
            return all[static_cast<std::size_t>(rng() % all.size())];
        }
        }
        return lowest(pool);
    };

    SearchState state(g);
    state.visit(start ? *start : choose(g.vertices()));
    while (!state.complete()) state.visit(choose(candidates(g, kind, state)));
    return VertexOrdering(std::vector<Vertex>(state.visited().begin(), state.visited().end()));
}

/// Default bound on materialized orderings.
inline constexpr std::size_t kDefaultEnumerationCap = 10'000'000;

/// Visits every ordering `kind` can produce on `g`, in lexicographic order.
/// `visit(std::span<const Vertex>)` returns false to stop early; the function
/// returns false iff it was stopped.
template <class Visitor>
bool for_each_ordering(const Graph& g, SearchKind kind, Visitor&& visit) {
    require_connected(g);
    SearchState state(g);
    auto recurse = [&](auto&& self) -> bool {
        if (state.complete()) return visit(state.visited());
        const VertexSet next = candidates(g, kind, state);
        for (VertexSet s = next; s != 0; s &= s - 1) {
            state.visit(lowest(s));
            const bool go_on = self(self);
            state.undo();
            if (!go_on) return false;
        }
        return true;
    };
    return recurse(recurse);
}

struct Enumeration {
    std::vector<VertexOrdering> orderings; ///< lexicographically sorted, distinct
    bool truncated = false;                ///< more orderings exist beyond the cap
};

/// All orderings `kind` can produce on `g`. Distinct branches yield distinct
/// prefixes, so the result has no duplicates by construction.
inline Enumeration enumerate_orderings(const Graph& g, SearchKind kind,
                                       std::size_t cap = kDefaultEnumerationCap) {
    if (cap == 0) throw InvalidArgumentError("enumeration cap must be positive");
    Enumeration out;
    for_each_ordering(g, kind, [&](std::span<const Vertex> order) {
        if (out.orderings.size() == cap) {
            out.truncated = true;
            return false;
        }
        out.orderings.emplace_back(std::vector<Vertex>(order.begin(), order.end()));
        return true;
    });
    return out;
}

} // namespace gsearch
