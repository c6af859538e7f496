#pragma once

#include <algorithm>
#include <bit>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "error.hpp"

namespace gsearch {

using Vertex = int;

/// Vertex subsets are bitmasks: bit v set iff vertex v is a member.
using VertexSet = std::uint64_t;

using Edge = std::pair<Vertex, Vertex>;

/// Largest vertex count a Graph can hold (graph6 short form limit).
inline constexpr int kMaxVertices = 62;

constexpr VertexSet singleton(Vertex v) { return VertexSet{1} << v; }

constexpr bool contains(VertexSet s, Vertex v) { return (s >> v) & 1U; }

constexpr int cardinality(VertexSet s) { return std::popcount(s); }

/// Set of vertices 0..n-1.
constexpr VertexSet first_n(int n) {
    return n >= 64 ? ~VertexSet{0} : (VertexSet{1} << n) - 1;
}

/// Smallest member; `s` must be non-empty.
constexpr Vertex lowest(VertexSet s) { return std::countr_zero(s); }

/// Largest member; `s` must be non-empty.
constexpr Vertex highest(VertexSet s) { return 63 - std::countl_zero(s); }

/// Members of `s` in increasing order.
inline std::vector<Vertex> members(VertexSet s) {
    std::vector<Vertex> out;
    out.reserve(cardinality(s));
    for (; s != 0; s &= s - 1) out.push_back(lowest(s));
    return out;
}

/// Calls `f(v)` for every member of `s` in increasing order.
template <class F>
constexpr void for_each_member(VertexSet s, F&& f) {
    for (; s != 0; s &= s - 1) f(lowest(s));
}

/// Simple undirected graph on vertices 0..n-1 with bitset adjacency.
/// Immutable once constructed.
class Graph {
public:
    Graph() = default;

    /// Edgeless graph on `n` vertices.
    explicit Graph(int n) : n_(check_order(n)), adj_(static_cast<std::size_t>(n_), 0) {}

    Graph(int n, std::span<const Edge> edges) : Graph(n) {
        for (auto [u, v] : edges) add_edge(u, v);
    }

    Graph(int n, std::initializer_list<Edge> edges)
        : Graph(n, std::span<const Edge>(edges.begin(), edges.size())) {}

    int order() const noexcept { return n_; }

    VertexSet vertices() const noexcept { return first_n(n_); }

    VertexSet neighbors(Vertex v) const { return adj_[static_cast<std::size_t>(v)]; }

    bool adjacent(Vertex u, Vertex v) const { return contains(neighbors(u), v); }

    int degree(Vertex v) const { return cardinality(neighbors(v)); }

    bool has_vertex(Vertex v) const noexcept { return v >= 0 && v < n_; }

    int edge_count() const {
        int twice = 0;
        for (VertexSet s : adj_) twice += cardinality(s);
        return twice / 2;
    }

    /// Edges (u, v) with u < v, sorted.
    std::vector<Edge> edges() const {
        std::vector<Edge> out;
        for (Vertex u = 0; u < n_; ++u)
            for_each_member(neighbors(u) & ~first_n(u + 1), [&](Vertex v) { out.emplace_back(u, v); });
        return out;
    }

    friend bool operator==(const Graph&, const Graph&) = default;

private:
    static int check_order(int n) {
        if (n < 0) throw InvalidArgumentError("vertex count must be non-negative");
        if (n > kMaxVertices)
            throw SizeLimitError("graphs are limited to " + std::to_string(kMaxVertices) +
                                 " vertices, got " + std::to_string(n));
        return n;
    }

    void add_edge(Vertex u, Vertex v) {
        if (!has_vertex(u) || !has_vertex(v))
            throw InvalidArgumentError("edge " + std::to_string(u) + "-" + std::to_string(v) +
                                       " outside vertex range [0, " + std::to_string(n_) + ")");
        if (u == v) throw InvalidArgumentError("loop at vertex " + std::to_string(u));
        adj_[static_cast<std::size_t>(u)] |= singleton(v);
        adj_[static_cast<std::size_t>(v)] |= singleton(u);
    }

    int n_ = 0;
    std::vector<VertexSet> adj_;
};

/// A permutation of a graph's vertex set together with its inverse.
class VertexOrdering {
public:
    VertexOrdering() = default;

    /// Throws InvalidArgumentError unless `order` is a bijection on [0, size).
    explicit VertexOrdering(std::vector<Vertex> order) : order_(std::move(order)) {
        const auto n = order_.size();
        position_.assign(n, -1);
        for (std::size_t i = 0; i < n; ++i) {
            const Vertex v = order_[i];
            if (v < 0 || static_cast<std::size_t>(v) >= n)
                throw InvalidArgumentError("ordering entry " + std::to_string(v) +
                                           " is not a vertex of a " + std::to_string(n) +
                                           "-vertex graph");
            if (position_[static_cast<std::size_t>(v)] != -1)
                throw InvalidArgumentError("vertex " + std::to_string(v) +
                                           " appears twice in ordering");
            position_[static_cast<std::size_t>(v)] = static_cast<int>(i);
        }
    }

    VertexOrdering(std::initializer_list<Vertex> order)
        : VertexOrdering(std::vector<Vertex>(order)) {}

    std::size_t size() const noexcept { return order_.size(); }
    Vertex operator[](std::size_t i) const { return order_[i]; }
    int position(Vertex v) const { return position_[static_cast<std::size_t>(v)]; }

    /// a <σ b
    bool before(Vertex a, Vertex b) const { return position(a) < position(b); }

    const std::vector<Vertex>& sequence() const noexcept { return order_; }
    auto begin() const noexcept { return order_.begin(); }
    auto end() const noexcept { return order_.end(); }

    friend bool operator==(const VertexOrdering& x, const VertexOrdering& y) {
        return x.order_ == y.order_;
    }
    friend auto operator<=>(const VertexOrdering& x, const VertexOrdering& y) {
        return x.order_ <=> y.order_;
    }

private:
    std::vector<Vertex> order_;
    std::vector<int> position_;
};

/// Vertices reachable from `from`.
inline VertexSet reachable(const Graph& g, Vertex from) {
    VertexSet seen = singleton(from);
    VertexSet frontier = seen;
    while (frontier != 0) {
        VertexSet next = 0;
        for_each_member(frontier, [&](Vertex v) { next |= g.neighbors(v); });
        frontier = next & ~seen;
        seen |= frontier;
    }
    return seen;
}

/// Vacuously true for n <= 1.
inline bool is_connected(const Graph& g) {
    if (g.order() <= 1) return true;
    return reachable(g, 0) == g.vertices();
}

/// Vertex sets of the connected components, ordered by smallest member.
inline std::vector<VertexSet> components(const Graph& g) {
    std::vector<VertexSet> out;
    VertexSet left = g.vertices();
    while (left != 0) {
        const VertexSet c = reachable(g, lowest(left));
        out.push_back(c);
        left &= ~c;
    }
    return out;
}

inline void require_connected(const Graph& g) {
    if (!is_connected(g))
        throw DisconnectedGraphError("graph is disconnected; search-theoretic operations need a connected graph");
}

/// Subgraph induced by `keep` plus the old->new index map (-1 for dropped
/// vertices). New index i is `keep[i]`, so the caller controls the labeling.
struct InducedSubgraph {
    Graph graph;
    std::vector<Vertex> old_to_new;
};

inline InducedSubgraph induced_subgraph(const Graph& g, std::span<const Vertex> keep) {
    std::vector<Vertex> old_to_new(static_cast<std::size_t>(g.order()), -1);
    for (std::size_t i = 0; i < keep.size(); ++i) {
        const Vertex v = keep[i];
        if (!g.has_vertex(v))
            throw InvalidArgumentError("vertex " + std::to_string(v) + " is not in the graph");
        if (old_to_new[static_cast<std::size_t>(v)] != -1)
            throw InvalidArgumentError("vertex " + std::to_string(v) + " listed twice");
        old_to_new[static_cast<std::size_t>(v)] = static_cast<Vertex>(i);
    }
    std::vector<Edge> edges;
    for (std::size_t i = 0; i < keep.size(); ++i)
        for (std::size_t j = i + 1; j < keep.size(); ++j)
            if (g.adjacent(keep[i], keep[j]))
                edges.emplace_back(static_cast<Vertex>(i), static_cast<Vertex>(j));
    return {Graph(static_cast<int>(keep.size()), edges), std::move(old_to_new)};
}

inline InducedSubgraph induced_subgraph(const Graph& g, VertexSet keep) {
    if ((keep & ~g.vertices()) != 0)
        throw InvalidArgumentError("vertex " + std::to_string(lowest(keep & ~g.vertices())) +
                                   " is not in the graph");
    const auto kept = members(keep);
    return induced_subgraph(g, std::span<const Vertex>(kept));
}

/// Removes one vertex, relabeling the rest in increasing order.
inline Graph delete_vertex(const Graph& g, Vertex v) {
    return induced_subgraph(g, g.vertices() & ~singleton(v)).graph;
}

/// Complement graph.
inline Graph complement(const Graph& g) {
    std::vector<Edge> edges;
    for (Vertex u = 0; u < g.order(); ++u)
        for (Vertex v = u + 1; v < g.order(); ++v)
            if (!g.adjacent(u, v)) edges.emplace_back(u, v);
    return Graph(g.order(), edges);
}

} // namespace gsearch
