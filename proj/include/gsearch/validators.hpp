#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "graph.hpp"
#include "search_kind.hpp"
#include "searches.hpp"

namespace gsearch {

/// A triple a <σ b <σ c with ac ∈ E and ab ∉ E for which no vertex d
/// satisfies the clause of `kind`.
struct PointViolation {
    Vertex a = 0;
    Vertex b = 0;
    Vertex c = 0;
    SearchKind kind = SearchKind::BFS;
    std::string reason;

    friend bool operator==(const PointViolation&, const PointViolation&) = default;
};

/// Outcome of checking one ordering against one paradigm.
struct Verdict {
    bool valid = true;
    SearchKind kind = SearchKind::Generic;
    /// Set when a point condition fails.
    std::optional<PointViolation> violation;
    /// Set when the prefix condition (first vertex with no earlier neighbor)
    /// or the MCS rule (first vertex that was not a maximum-count choice) fails.
    std::optional<Vertex> offender;
    std::string reason;

    explicit operator bool() const noexcept { return valid; }
    friend bool operator==(const Verdict&, const Verdict&) = default;
};

namespace detail {

inline void require_same_size(const Graph& g, std::size_t size) {
    if (size != static_cast<std::size_t>(g.order()))
        throw InvalidArgumentError("ordering has " + std::to_string(size) + " entries but the graph has " +
                                   std::to_string(g.order()) + " vertices");
}

/// For each position i, the positions of σ[i]'s neighbors.
inline std::vector<PositionSet> neighbor_positions(const Graph& g, std::span<const Vertex> order) {
    std::vector<int> pos(order.size());
    for (std::size_t i = 0; i < order.size(); ++i) pos[static_cast<std::size_t>(order[i])] = static_cast<int>(i);
    std::vector<PositionSet> out(order.size(), 0);
    for (std::size_t i = 0; i < order.size(); ++i)
        for_each_member(g.neighbors(order[i]), [&](Vertex u) { out[i] |= PositionSet{1} << pos[static_cast<std::size_t>(u)]; });
    return out;
}

/// Positions p with lo <= p < hi.
constexpr PositionSet position_range(std::size_t lo, std::size_t hi) {
    return hi <= lo ? 0 : (first_n(static_cast<int>(hi)) & ~first_n(static_cast<int>(lo)));
}

constexpr std::string_view clause_text(SearchKind kind) {
    switch (kind) {
    case SearchKind::BFS: return "no d <σ a with db ∈ E";
    case SearchKind::DFS: return "no d with a <σ d <σ b and db ∈ E";
    case SearchKind::LexBFS: return "no d <σ a with db ∈ E and dc ∉ E";
    case SearchKind::LexDFS: return "no d with a <σ d <σ b, db ∈ E and dc ∉ E";
    case SearchKind::MNS: return "no d <σ b with db ∈ E and dc ∉ E";
    default: return "";
    }
}

/// Triple scan over an ordering given as a vertex sequence; the order is
/// assumed to be a permutation of g's vertices.
inline Verdict point_condition(const Graph& g, std::span<const Vertex> order, SearchKind kind) {
    const auto nb = neighbor_positions(g, order);
    const std::size_t n = order.size();
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            if ((nb[i] >> j) & 1U) continue; // ab ∈ E
            for (std::size_t k = j + 1; k < n; ++k) {
                if (!((nb[i] >> k) & 1U)) continue; // ac ∉ E
                PositionSet witnesses = 0;
                switch (kind) {
                case SearchKind::BFS: witnesses = nb[j] & position_range(0, i); break;
                case SearchKind::DFS: witnesses = nb[j] & position_range(i + 1, j); break;
                case SearchKind::LexBFS: witnesses = nb[j] & ~nb[k] & position_range(0, i); break;
                case SearchKind::LexDFS: witnesses = nb[j] & ~nb[k] & position_range(i + 1, j); break;
                case SearchKind::MNS: witnesses = nb[j] & ~nb[k] & position_range(0, j); break;
                default: throw InvalidArgumentError("no point condition for " + std::string(to_string(kind)));
                }
                if (witnesses == 0) {
                    PointViolation v{order[i], order[j], order[k], kind, std::string(clause_text(kind))};
                    Verdict out{false, kind, v, std::nullopt, {}};
                    out.reason = "triple (" + std::to_string(v.a) + ", " + std::to_string(v.b) + ", " +
                                 std::to_string(v.c) + "): " + v.reason;
                    return out;
                }
            }
        }
    }
    return Verdict{true, kind, std::nullopt, std::nullopt, {}};
}

inline Verdict generic_prefix(const Graph& g, std::span<const Vertex> order) {
    VertexSet seen = 0;
    for (std::size_t i = 0; i < order.size(); ++i) {
        const Vertex v = order[i];
        if (i > 0 && (g.neighbors(v) & seen) == 0)
            return Verdict{false, SearchKind::Generic, std::nullopt, v,
                           "vertex " + std::to_string(v) + " at position " + std::to_string(i) +
                               " has no earlier neighbor"};
        seen |= singleton(v);
    }
    return Verdict{true, SearchKind::Generic, std::nullopt, std::nullopt, {}};
}

inline Verdict max_cardinality(const Graph& g, std::span<const Vertex> order) {
    VertexSet seen = 0;
    for (std::size_t i = 0; i < order.size(); ++i) {
        const Vertex v = order[i];
        const int mine = cardinality(g.neighbors(v) & seen);
        int best = mine;
        for_each_member(g.vertices() & ~seen, [&](Vertex u) { best = std::max(best, cardinality(g.neighbors(u) & seen)); });
        if (mine < best)
            return Verdict{false, SearchKind::MCS, std::nullopt, v,
                           "vertex " + std::to_string(v) + " at position " + std::to_string(i) + " has " +
                               std::to_string(mine) + " visited neighbors, maximum is " + std::to_string(best)};
        seen |= singleton(v);
    }
    return Verdict{true, SearchKind::MCS, std::nullopt, std::nullopt, {}};
}

/// Full membership test on a raw sequence; no size or connectivity checks.
inline Verdict search_ordering(const Graph& g, std::span<const Vertex> order, SearchKind kind) {
    Verdict prefix = generic_prefix(g, order);
    if (!prefix.valid || kind == SearchKind::Generic) {
        prefix.kind = kind;
        return prefix;
    }
    if (kind == SearchKind::MCS) return max_cardinality(g, order);
    return point_condition(g, order, kind);
}

} // namespace detail

/// Every non-first vertex has a σ-earlier neighbor (every prefix induces a
/// connected subgraph). On failure `offender` is the first such vertex.
inline Verdict is_generic_order(const Graph& g, const VertexOrdering& sigma) {
    detail::require_same_size(g, sigma.size());
    return detail::generic_prefix(g, sigma.sequence());
}

/// Three-point condition of BFS, DFS, LexBFS, LexDFS or MNS. Reports the
/// violating triple with lexicographically smallest (pos a, pos b, pos c).
inline Verdict check_point_condition(const Graph& g, const VertexOrdering& sigma, SearchKind kind) {
    if (kind == SearchKind::Generic || kind == SearchKind::MCS)
        throw InvalidArgumentError(std::string(to_string(kind)) +
                                   " has no point condition; use is_search_ordering");
    detail::require_same_size(g, sigma.size());
    return detail::point_condition(g, sigma.sequence(), kind);
}

/// Membership of σ in the orderings of `kind`: the prefix condition, plus the
/// point condition for BFS/DFS/LexBFS/LexDFS/MNS, plus step-by-step
/// maximum-cardinality simulation for MCS.
inline Verdict is_search_ordering(const Graph& g, const VertexOrdering& sigma, SearchKind kind) {
    detail::require_same_size(g, sigma.size());
    require_connected(g);
    return detail::search_ordering(g, sigma.sequence(), kind);
}

} // namespace gsearch
