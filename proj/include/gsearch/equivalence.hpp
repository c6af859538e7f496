#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "patterns.hpp"
#include "searches.hpp"
#include "validators.hpp"

namespace gsearch {

enum class Relation { Subset, Equal };

constexpr std::string_view to_string(Relation r) { return r == Relation::Subset ? "subset" : "equal"; }

/// An ordering produced by `valid_for` that `invalid_for` rejects.
struct Witness {
    VertexOrdering ordering;
    SearchKind valid_for = SearchKind::Generic;
    SearchKind invalid_for = SearchKind::Generic;
    Verdict failure; ///< the rejecting verdict; carries the violated triple for point-condition kinds

    friend bool operator==(const Witness&, const Witness&) = default;
};

struct EquivalenceReport {
    SearchKind kind_x = SearchKind::Generic;
    SearchKind kind_y = SearchKind::Generic;
    Relation relation = Relation::Subset;
    bool verdict = true;
    std::optional<Witness> witness; ///< present iff verdict is false
    bool truncated = false;         ///< enumeration stopped at the cap before finishing

    friend bool operator==(const EquivalenceReport&, const EquivalenceReport&) = default;
};

struct EquivalenceOptions {
    int max_vertices = 8;     ///< size guard for exhaustive checks
    bool allow_large = false; ///< lift the size guard
    std::size_t cap = kDefaultEnumerationCap;
};

namespace detail {

inline void guard(const Graph& g, const EquivalenceOptions& opt) {
    if (!opt.allow_large && g.order() > opt.max_vertices)
        throw SizeLimitError("exhaustive check limited to " + std::to_string(opt.max_vertices) +
                             " vertices (graph has " + std::to_string(g.order()) + "); pass the override to force");
    require_connected(g);
}

/// First `from` ordering (lexicographic) that `to` rejects; flags truncation.
inline std::optional<Witness> first_counterexample(const Graph& g, SearchKind from, SearchKind to,
                                                   std::size_t cap, bool& truncated) {
    std::optional<Witness> found;
    std::size_t seen = 0;
    for_each_ordering(g, from, [&](std::span<const Vertex> order) {
        if (seen++ == cap) {
            truncated = true;
            return false;
        }
        Verdict v = search_ordering(g, order, to);
        if (v.valid) return true;
        found = Witness{VertexOrdering(std::vector<Vertex>(order.begin(), order.end())), from, to, std::move(v)};
        return false;
    });
    return found;
}

} // namespace detail

/// Whether every ordering of `kind_x` on g is also a `kind_y` ordering.
/// kind_x orderings are enumerated and each is validated against kind_y.
inline EquivalenceReport orderings_subset(const Graph& g, SearchKind kind_x, SearchKind kind_y,
                                          const EquivalenceOptions& opt = {}) {
    detail::guard(g, opt);
    EquivalenceReport r{kind_x, kind_y, Relation::Subset, true, std::nullopt, false};
    r.witness = detail::first_counterexample(g, kind_x, kind_y, opt.cap, r.truncated);
    r.verdict = !r.witness.has_value();
    return r;
}

/// Both inclusions; the witness comes from the first failing direction (x ⊆ y first).
inline EquivalenceReport orderings_equal(const Graph& g, SearchKind kind_x, SearchKind kind_y,
                                         const EquivalenceOptions& opt = {}) {
    detail::guard(g, opt);
    EquivalenceReport r{kind_x, kind_y, Relation::Equal, true, std::nullopt, false};
    r.witness = detail::first_counterexample(g, kind_x, kind_y, opt.cap, r.truncated);
    if (!r.witness) r.witness = detail::first_counterexample(g, kind_y, kind_x, opt.cap, r.truncated);
    r.verdict = !r.witness.has_value();
    return r;
}

inline EquivalenceReport orderings_relation(const Graph& g, SearchKind kind_x, SearchKind kind_y,
                                            Relation rel, const EquivalenceOptions& opt = {}) {
    return rel == Relation::Subset ? orderings_subset(g, kind_x, kind_y, opt)
                                   : orderings_equal(g, kind_x, kind_y, opt);
}

enum class Theorem { A, B, C, CorollaryA5A6 };

inline constexpr std::array<Theorem, 4> kAllTheorems = {Theorem::A, Theorem::B, Theorem::C,
                                                        Theorem::CorollaryA5A6};

constexpr std::string_view to_string(Theorem t) {
    switch (t) {
    case Theorem::A: return "A";
    case Theorem::B: return "B";
    case Theorem::C: return "C";
    case Theorem::CorollaryA5A6: return "corollary";
    }
    return "?";
}

inline Theorem parse_theorem(std::string_view s) {
    if (s == "A" || s == "a") return Theorem::A;
    if (s == "B" || s == "b") return Theorem::B;
    if (s == "C" || s == "c") return Theorem::C;
    if (s == "corollary" || s == "Corollary" || s == "A5A6") return Theorem::CorollaryA5A6;
    throw InvalidArgumentError("unknown theorem '" + std::string(s) + "' (expected A, B, C or corollary)");
}

/// One numbered behavioral item of a theorem, e.g. "B2: DFS ⊆ LexDFS".
struct TheoremItem {
    std::string label;
    EquivalenceReport report;

    friend bool operator==(const TheoremItem&, const TheoremItem&) = default;
};

struct TheoremReport {
    Theorem theorem = Theorem::A;
    bool structural_prediction = false; ///< class flag from recognize_structure
    bool forbidden_free = false;        ///< same class via the induced-subgraph detectors
    std::optional<PatternHit> obstruction; ///< detector hit when forbidden_free is false
    std::vector<TheoremItem> items;
    bool consistent = false;

    friend bool operator==(const TheoremReport&, const TheoremReport&) = default;
};

namespace detail {

struct ItemSpec {
    std::string_view label;
    SearchKind x;
    SearchKind y;
    Relation rel;
};

inline std::vector<ItemSpec> theorem_items(Theorem t) {
    using K = SearchKind;
    switch (t) {
    case Theorem::A:
        return {{"A2", K::Generic, K::DFS, Relation::Subset},
                {"A3", K::Generic, K::BFS, Relation::Subset},
                {"A4", K::BFS, K::DFS, Relation::Equal}};
    case Theorem::B:
        return {{"B2", K::DFS, K::LexDFS, Relation::Subset},
                {"B3", K::BFS, K::LexBFS, Relation::Subset},
                {"B4", K::Generic, K::MNS, Relation::Subset}};
    case Theorem::C:
        return {{"C2", K::MNS, K::LexDFS, Relation::Subset},
                {"C3", K::MNS, K::LexBFS, Relation::Subset}};
    case Theorem::CorollaryA5A6:
        return {{"A5", K::Generic, K::LexDFS, Relation::Subset},
                {"A6", K::Generic, K::LexBFS, Relation::Subset}};
    }
    return {};
}

/// First detector hit among the theorem's forbidden patterns.
inline std::optional<PatternHit> forbidden_obstruction(const Graph& g, Theorem t) {
    auto first_small = [&](std::initializer_list<Pattern> ps) -> std::optional<PatternHit> {
        for (Pattern p : ps)
            if (auto hit = find_induced_small(g, p)) return hit;
        return std::nullopt;
    };
    switch (t) {
    case Theorem::A:
    case Theorem::CorollaryA5A6:
        return first_small({Pattern::P4, Pattern::C4, Pattern::Paw, Pattern::Diamond});
    case Theorem::B:
        if (auto hit = find_induced_pan(g)) return hit;
        return first_small({Pattern::Diamond});
    case Theorem::C:
        return first_small({Pattern::P4, Pattern::C4});
    }
    return std::nullopt;
}

} // namespace detail

/// Item label plus its relation in words, e.g. "B2 DFS subset LexDFS".
inline std::string describe(const TheoremItem& item) {
    return item.label + " " + std::string(to_string(item.report.kind_x)) + " " +
           std::string(to_string(item.report.relation)) + " " + std::string(to_string(item.report.kind_y));
}

/// Compares a theorem's structural class with the enumerated behavior of
/// each of its numbered items on one connected graph.
inline TheoremReport check_theorem(const Graph& g, Theorem t, const EquivalenceOptions& opt = {}) {
    detail::guard(g, opt);
    TheoremReport r;
    r.theorem = t;
    const ClassLabel cls = recognize_structure(g);
    switch (t) {
    case Theorem::A:
    case Theorem::CorollaryA5A6: r.structural_prediction = *cls.class_a; break;
    case Theorem::B: r.structural_prediction = *cls.class_b; break;
    case Theorem::C: r.structural_prediction = *cls.class_c; break;
    }
    r.obstruction = detail::forbidden_obstruction(g, t);
    r.forbidden_free = !r.obstruction.has_value();

    r.consistent = r.forbidden_free == r.structural_prediction;
    for (const auto& spec : detail::theorem_items(t)) {
        TheoremItem item{std::string(spec.label), orderings_relation(g, spec.x, spec.y, spec.rel, opt)};
        r.consistent = r.consistent && !item.report.truncated && item.report.verdict == r.structural_prediction;
        r.items.push_back(std::move(item));
    }
    return r;
}

/// Lexicographically first MNS ordering that is not an MCS ordering.
inline std::optional<VertexOrdering> find_mns_not_mcs(const Graph& g, const EquivalenceOptions& opt = {}) {
    detail::guard(g, opt);
    bool truncated = false;
    auto w = detail::first_counterexample(g, SearchKind::MNS, SearchKind::MCS, opt.cap, truncated);
    if (!w) return std::nullopt;
    return w->ordering;
}

} // namespace gsearch
