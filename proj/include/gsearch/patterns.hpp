#pragma once

#include <algorithm>
#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "graph.hpp"

namespace gsearch {

enum class Pattern { P4, C4, Paw, Diamond, KPan };

constexpr std::string_view to_string(Pattern p) {
    switch (p) {
    case Pattern::P4: return "P4";
    case Pattern::C4: return "C4";
    case Pattern::Paw: return "Paw";
    case Pattern::Diamond: return "Diamond";
    case Pattern::KPan: return "KPan";
    }
    return "?";
}

/// An induced copy of a forbidden pattern. Vertex order is canonical:
///   P4       path order, starting at the smaller endpoint
///   C4       cyclic order from the smallest vertex towards its smaller neighbor
///   Paw      degree-3 vertex, the other two triangle vertices, pendant
///   Diamond  cyclic order u, x, w, y with chord xy (x, y the degree-3 pair)
///   KPan     cycle in cyclic order from the attachment vertex, then pendant
struct PatternHit {
    Pattern pattern = Pattern::P4;
    int k = 0; ///< cycle length for KPan, 0 otherwise
    std::vector<Vertex> vertices;

    friend bool operator==(const PatternHit&, const PatternHit&) = default;
};

/// The pattern itself, labeled in the canonical order of PatternHit.
inline Graph pattern_graph(Pattern p, int k = 0) {
    switch (p) {
    case Pattern::P4: return Graph(4, {{0, 1}, {1, 2}, {2, 3}});
    case Pattern::C4: return Graph(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}});
    case Pattern::Paw: return Graph(4, {{0, 1}, {1, 2}, {2, 0}, {0, 3}});
    case Pattern::Diamond: return Graph(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}, {1, 3}});
    case Pattern::KPan: {
        if (k < 3) throw InvalidArgumentError("a k-pan needs k >= 3");
        std::vector<Edge> e;
        for (Vertex v = 0; v < k; ++v) e.emplace_back(v, (v + 1) % k);
        e.emplace_back(0, k);
        return Graph(k + 1, e);
    }
    }
    return Graph();
}

/// True iff the hit's vertices induce exactly its pattern, in its canonical order.
inline bool verify_hit(const Graph& g, const PatternHit& hit) {
    return induced_subgraph(g, std::span<const Vertex>(hit.vertices)).graph == pattern_graph(hit.pattern, hit.k);
}

namespace detail {

/// Canonical hit for a 4-vertex set inducing `p`, or nullopt.
inline std::optional<PatternHit> match_quad(const Graph& g, std::array<Vertex, 4> q, Pattern p) {
    const VertexSet s = singleton(q[0]) | singleton(q[1]) | singleton(q[2]) | singleton(q[3]);
    std::array<int, 4> deg{};
    int twice_edges = 0;
    for (int i = 0; i < 4; ++i) {
        deg[i] = cardinality(g.neighbors(q[i]) & s);
        twice_edges += deg[i];
    }
    auto with_degree = [&](int d) {
        std::vector<Vertex> out;
        for (int i = 0; i < 4; ++i)
            if (deg[i] == d) out.push_back(q[i]);
        return out;
    };
    auto inner = [&](Vertex v) { return g.neighbors(v) & s; };

    switch (p) {
    case Pattern::P4: {
        if (twice_edges != 6) return std::nullopt;
        const auto ends = with_degree(1);
        if (ends.size() != 2 || with_degree(2).size() != 2) return std::nullopt;
        std::vector<Vertex> walk{ends[0]};
        VertexSet used = singleton(ends[0]);
        while (walk.size() < 4) {
            const VertexSet next = inner(walk.back()) & ~used;
            walk.push_back(lowest(next));
            used |= singleton(walk.back());
        }
        return PatternHit{p, 0, walk};
    }
    case Pattern::C4: {
        if (twice_edges != 8 || with_degree(2).size() != 4) return std::nullopt;
        const Vertex first = q[0];
        const Vertex second = lowest(inner(first));
        const Vertex fourth = highest(inner(first));
        const Vertex third = lowest(s & ~(singleton(first) | singleton(second) | singleton(fourth)));
        return PatternHit{p, 0, {first, second, third, fourth}};
    }
    case Pattern::Paw: {
        if (twice_edges != 8) return std::nullopt;
        const auto hub = with_degree(3);
        const auto pendant = with_degree(1);
        if (hub.size() != 1 || pendant.size() != 1) return std::nullopt;
        const auto rest = with_degree(2);
        return PatternHit{p, 0, {hub[0], rest[0], rest[1], pendant[0]}};
    }
    case Pattern::Diamond: {
        if (twice_edges != 10) return std::nullopt;
        const auto tips = with_degree(2);
        const auto spine = with_degree(3);
        return PatternHit{p, 0, {tips[0], spine[0], tips[1], spine[1]}};
    }
    case Pattern::KPan: break;
    }
    return std::nullopt;
}

/// Every induced cycle of length >= 3, each once, as a vertex sequence in
/// cyclic order starting at its smallest vertex.
inline std::vector<std::vector<Vertex>> induced_cycles(const Graph& g) {
    std::vector<std::vector<Vertex>> out;
    std::vector<Vertex> path;
    for (Vertex s = 0; s < g.order(); ++s) {
        const VertexSet allowed = g.vertices() & ~first_n(s + 1);
        path.assign(1, s);
        // `inner` holds the path vertices other than s and the current end.
        auto extend = [&](auto&& self, VertexSet on_path, VertexSet inner) -> void {
            const Vertex last = path.back();
            const VertexSet options = g.neighbors(last) & allowed & ~on_path;
            for_each_member(options, [&](Vertex v) {
                if ((g.neighbors(v) & inner) != 0) return;
                if (path.size() >= 2 && g.adjacent(v, s)) {
                    if (path[1] < v) {
                        out.push_back(path);
                        out.back().push_back(v);
                    }
                    return;
                }
                const VertexSet next_inner = path.size() >= 2 ? inner | singleton(last) : inner;
                path.push_back(v);
                self(self, on_path | singleton(v), next_inner);
                path.pop_back();
            });
        };
        extend(extend, singleton(s), 0);
    }
    return out;
}

} // namespace detail

/// Lexicographically first 4-vertex set (by sorted vertex indices) that induces
/// `pattern`. KPan is not a 4-vertex pattern; use find_induced_pan.
inline std::optional<PatternHit> find_induced_small(const Graph& g, Pattern pattern) {
    if (pattern == Pattern::KPan) throw InvalidArgumentError("use find_induced_pan for pans");
    const int n = g.order();
    for (Vertex a = 0; a < n; ++a)
        for (Vertex b = a + 1; b < n; ++b)
            for (Vertex c = b + 1; c < n; ++c)
                for (Vertex d = c + 1; d < n; ++d)
                    if (auto hit = detail::match_quad(g, {a, b, c, d}, pattern)) return hit;
    return std::nullopt;
}

/// An induced k-pan (k >= 3) of smallest k, if any. Enumerates induced
/// cycles, so it is meant for desk-scale graphs (n <= 12).
inline std::optional<PatternHit> find_induced_pan(const Graph& g) {
    auto cycles = detail::induced_cycles(g);
    std::stable_sort(cycles.begin(), cycles.end(),
                     [](const auto& x, const auto& y) { return x.size() < y.size(); });
    for (const auto& cyc : cycles) {
        VertexSet on_cycle = 0;
        for (Vertex v : cyc) on_cycle |= singleton(v);
        for (Vertex x = 0; x < g.order(); ++x) {
            if (contains(on_cycle, x)) continue;
            const VertexSet touch = g.neighbors(x) & on_cycle;
            if (cardinality(touch) != 1) continue;
            const Vertex attach = lowest(touch);
            const auto k = cyc.size();
            const auto at = static_cast<std::size_t>(std::find(cyc.begin(), cyc.end(), attach) - cyc.begin());
            const bool forward = cyc[(at + 1) % k] < cyc[(at + k - 1) % k];
            PatternHit hit{Pattern::KPan, static_cast<int>(k), {}};
            for (std::size_t i = 0; i < k; ++i)
                hit.vertices.push_back(forward ? cyc[(at + i) % k] : cyc[(at + k - i) % k]);
            hit.vertices.push_back(x);
            return hit;
        }
    }
    return std::nullopt;
}

inline bool is_triangle_free(const Graph& g) {
    for (const auto& [u, v] : g.edges())
        if ((g.neighbors(u) & g.neighbors(v)) != 0) return false;
    return true;
}

inline bool is_clique(const Graph& g) {
    return g.edge_count() == g.order() * (g.order() - 1) / 2;
}

inline bool is_forest(const Graph& g) {
    return g.edge_count() == g.order() - static_cast<int>(components(g).size());
}

/// Complement is a disjoint union of cliques (parts are its components).
inline bool is_complete_multipartite(const Graph& g) {
    const Graph co = complement(g);
    for (VertexSet part : components(co)) {
        bool ok = true;
        for_each_member(part, [&](Vertex v) { ok = ok && (co.neighbors(v) | singleton(v)) == part; });
        if (!ok) return false;
    }
    return true;
}

/// Trivially perfect by universal-vertex peeling: every connected piece with
/// two or more vertices has a universal vertex whose removal leaves a
/// trivially perfect graph.
inline bool is_trivially_perfect(const Graph& g) {
    auto peel = [&](auto&& self, VertexSet within) -> bool {
        const Graph sub = induced_subgraph(g, within).graph;
        const auto kept = members(within);
        for (VertexSet comp : components(sub)) {
            if (cardinality(comp) < 2) continue;
            std::optional<Vertex> universal;
            for_each_member(comp, [&](Vertex v) {
                if (!universal && (sub.neighbors(v) | singleton(v)) == comp) universal = v;
            });
            if (!universal) return false;
            VertexSet rest = 0;
            for_each_member(comp & ~singleton(*universal), [&](Vertex v) { rest |= singleton(kept[static_cast<std::size_t>(v)]); });
            if (!self(self, rest)) return false;
        }
        return true;
    };
    return peel(peel, g.vertices());
}

/// Structural class flags. Flags that only make sense for connected graphs are
/// empty (unavailable) on disconnected input.
struct ClassLabel {
    bool connected = true;
    bool clique = false;
    bool forest = false;
    bool triangle_free = false;
    bool trivially_perfect = false;
    std::optional<bool> star;                  ///< K_{1,m}, m >= 0
    std::optional<bool> tree;
    std::optional<bool> cycle;                 ///< C_n with n >= 4
    std::optional<bool> complete_bipartite;    ///< K_{p,q}, p, q >= 1
    std::optional<bool> complete_multipartite;
    std::optional<bool> class_a;               ///< star or clique
    std::optional<bool> class_b;               ///< tree, cycle, clique or complete bipartite
    std::optional<bool> class_c;               ///< trivially perfect

    friend bool operator==(const ClassLabel&, const ClassLabel&) = default;
};

inline ClassLabel recognize_structure(const Graph& g) {
    ClassLabel out;
    const int n = g.order();
    const int m = g.edge_count();
    out.connected = is_connected(g);
    out.clique = is_clique(g);
    out.forest = is_forest(g);
    out.triangle_free = is_triangle_free(g);
    out.trivially_perfect = is_trivially_perfect(g);
    if (!out.connected) return out;

    bool has_universal = false;
    bool two_regular = n > 0;
    for (Vertex v = 0; v < n; ++v) {
        has_universal = has_universal || g.degree(v) == n - 1;
        two_regular = two_regular && g.degree(v) == 2;
    }
    out.tree = m == n - 1;
    out.star = *out.tree && has_universal;
    out.cycle = n >= 4 && two_regular;
    out.complete_multipartite = is_complete_multipartite(g);
    out.complete_bipartite = *out.complete_multipartite && components(complement(g)).size() == 2;
    out.class_a = *out.star || out.clique;
    out.class_b = *out.tree || *out.cycle || out.clique || *out.complete_bipartite;
    out.class_c = out.trivially_perfect;
    return out;
}

struct PawFreeDecomposition {
    enum class Verdict { TriangleFree, CompleteMultipartite, ContainsPaw };
    Verdict verdict = Verdict::TriangleFree;
    std::optional<PatternHit> paw; ///< set iff verdict is ContainsPaw
};

constexpr std::string_view to_string(PawFreeDecomposition::Verdict v) {
    switch (v) {
    case PawFreeDecomposition::Verdict::TriangleFree: return "triangle-free";
    case PawFreeDecomposition::Verdict::CompleteMultipartite: return "complete-multipartite";
    case PawFreeDecomposition::Verdict::ContainsPaw: return "contains-paw";
    }
    return "?";
}

/// Olariu split of a connected graph. Triangle-free takes precedence over
/// complete multipartite when both hold (e.g. C4). Throws InternalStateError
/// if a paw-free graph is neither, which would contradict Olariu's theorem.
inline PawFreeDecomposition paw_free_decomposition(const Graph& g) {
    require_connected(g);
    using V = PawFreeDecomposition::Verdict;
    if (auto hit = find_induced_small(g, Pattern::Paw)) return {V::ContainsPaw, std::move(hit)};
    if (is_triangle_free(g)) return {V::TriangleFree, std::nullopt};
    if (is_complete_multipartite(g)) return {V::CompleteMultipartite, std::nullopt};
    throw InternalStateError("paw-free graph that is neither triangle-free nor complete multipartite");
}

} // namespace gsearch
