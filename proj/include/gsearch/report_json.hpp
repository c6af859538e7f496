#pragma once

// JSON forms of the report types. Field names follow the C++ members;
// orderings are integer arrays and unavailable optionals are null.

#include <nlohmann/json.hpp>

#include "equivalence.hpp"
#include "patterns.hpp"
#include "scan.hpp"
#include "validators.hpp"

namespace gsearch {

namespace detail {

template <class T>
nlohmann::json optional_json(const std::optional<T>& v) {
    return v ? nlohmann::json(*v) : nlohmann::json(nullptr);
}

template <class T>
void read_optional(const nlohmann::json& j, const char* key, std::optional<T>& out) {
    if (!j.contains(key) || j.at(key).is_null())
        out.reset();
    else
        out = j.at(key).get<T>();
}

} // namespace detail

inline void to_json(nlohmann::json& j, SearchKind k) { j = std::string(to_string(k)); }
inline void from_json(const nlohmann::json& j, SearchKind& k) { k = parse_search_kind(j.get<std::string>()); }

inline void to_json(nlohmann::json& j, Relation r) { j = std::string(to_string(r)); }
inline void from_json(const nlohmann::json& j, Relation& r) {
    const auto s = j.get<std::string>();
    if (s == "subset") r = Relation::Subset;
    else if (s == "equal") r = Relation::Equal;
    else throw InvalidArgumentError("unknown relation '" + s + "'");
}

inline void to_json(nlohmann::json& j, Theorem t) { j = std::string(to_string(t)); }
inline void from_json(const nlohmann::json& j, Theorem& t) { t = parse_theorem(j.get<std::string>()); }

inline void to_json(nlohmann::json& j, Pattern p) { j = std::string(to_string(p)); }
inline void from_json(const nlohmann::json& j, Pattern& p) {
    const auto s = j.get<std::string>();
    for (Pattern q : {Pattern::P4, Pattern::C4, Pattern::Paw, Pattern::Diamond, Pattern::KPan})
        if (s == to_string(q)) {
            p = q;
            return;
        }
    throw InvalidArgumentError("unknown pattern '" + s + "'");
}

inline void to_json(nlohmann::json& j, const VertexOrdering& o) { j = o.sequence(); }
inline void from_json(const nlohmann::json& j, VertexOrdering& o) { o = VertexOrdering(j.get<std::vector<Vertex>>()); }

inline void to_json(nlohmann::json& j, const PointViolation& v) {
    j = {{"a", v.a}, {"b", v.b}, {"c", v.c}, {"kind", v.kind}, {"reason", v.reason}};
}
inline void from_json(const nlohmann::json& j, PointViolation& v) {
    j.at("a").get_to(v.a);
    j.at("b").get_to(v.b);
    j.at("c").get_to(v.c);
    j.at("kind").get_to(v.kind);
    j.at("reason").get_to(v.reason);
}

inline void to_json(nlohmann::json& j, const Verdict& v) {
    j = {{"valid", v.valid},
         {"kind", v.kind},
         {"violation", detail::optional_json(v.violation)},
         {"offender", detail::optional_json(v.offender)},
         {"reason", v.reason}};
}
inline void from_json(const nlohmann::json& j, Verdict& v) {
    j.at("valid").get_to(v.valid);
    j.at("kind").get_to(v.kind);
    detail::read_optional(j, "violation", v.violation);
    detail::read_optional(j, "offender", v.offender);
    j.at("reason").get_to(v.reason);
}

inline void to_json(nlohmann::json& j, const Witness& w) {
    j = {{"ordering", w.ordering}, {"valid_for", w.valid_for}, {"invalid_for", w.invalid_for}, {"failure", w.failure}};
}
inline void from_json(const nlohmann::json& j, Witness& w) {
    j.at("ordering").get_to(w.ordering);
    j.at("valid_for").get_to(w.valid_for);
    j.at("invalid_for").get_to(w.invalid_for);
    j.at("failure").get_to(w.failure);
}

inline void to_json(nlohmann::json& j, const EquivalenceReport& r) {
    j = {{"kind_x", r.kind_x},   {"kind_y", r.kind_y},
         {"relation", r.relation}, {"verdict", r.verdict},
         {"witness", detail::optional_json(r.witness)}, {"truncated", r.truncated}};
}
inline void from_json(const nlohmann::json& j, EquivalenceReport& r) {
    j.at("kind_x").get_to(r.kind_x);
    j.at("kind_y").get_to(r.kind_y);
    j.at("relation").get_to(r.relation);
    j.at("verdict").get_to(r.verdict);
    detail::read_optional(j, "witness", r.witness);
    j.at("truncated").get_to(r.truncated);
}

inline void to_json(nlohmann::json& j, const PatternHit& h) {
    j = {{"pattern", h.pattern}, {"k", h.k}, {"vertices", h.vertices}};
}
inline void from_json(const nlohmann::json& j, PatternHit& h) {
    j.at("pattern").get_to(h.pattern);
    j.at("k").get_to(h.k);
    j.at("vertices").get_to(h.vertices);
}

inline void to_json(nlohmann::json& j, const ClassLabel& c) {
    j = {{"connected", c.connected},
         {"clique", c.clique},
         {"forest", c.forest},
         {"triangle_free", c.triangle_free},
         {"trivially_perfect", c.trivially_perfect},
         {"star", detail::optional_json(c.star)},
         {"tree", detail::optional_json(c.tree)},
         {"cycle", detail::optional_json(c.cycle)},
         {"complete_bipartite", detail::optional_json(c.complete_bipartite)},
         {"complete_multipartite", detail::optional_json(c.complete_multipartite)},
         {"class_a", detail::optional_json(c.class_a)},
         {"class_b", detail::optional_json(c.class_b)},
         {"class_c", detail::optional_json(c.class_c)}};
}
inline void from_json(const nlohmann::json& j, ClassLabel& c) {
    j.at("connected").get_to(c.connected);
    j.at("clique").get_to(c.clique);
    j.at("forest").get_to(c.forest);
    j.at("triangle_free").get_to(c.triangle_free);
    j.at("trivially_perfect").get_to(c.trivially_perfect);
    detail::read_optional(j, "star", c.star);
    detail::read_optional(j, "tree", c.tree);
    detail::read_optional(j, "cycle", c.cycle);
    detail::read_optional(j, "complete_bipartite", c.complete_bipartite);
    detail::read_optional(j, "complete_multipartite", c.complete_multipartite);
    detail::read_optional(j, "class_a", c.class_a);
    detail::read_optional(j, "class_b", c.class_b);
    detail::read_optional(j, "class_c", c.class_c);
}

inline void to_json(nlohmann::json& j, const TheoremItem& i) { j = {{"label", i.label}, {"report", i.report}}; }
inline void from_json(const nlohmann::json& j, TheoremItem& i) {
    j.at("label").get_to(i.label);
    j.at("report").get_to(i.report);
}

inline void to_json(nlohmann::json& j, const TheoremReport& r) {
    j = {{"theorem", r.theorem},
         {"structural_prediction", r.structural_prediction},
         {"forbidden_free", r.forbidden_free},
         {"obstruction", detail::optional_json(r.obstruction)},
         {"items", r.items},
         {"consistent", r.consistent}};
}
inline void from_json(const nlohmann::json& j, TheoremReport& r) {
    j.at("theorem").get_to(r.theorem);
    j.at("structural_prediction").get_to(r.structural_prediction);
    j.at("forbidden_free").get_to(r.forbidden_free);
    detail::read_optional(j, "obstruction", r.obstruction);
    j.at("items").get_to(r.items);
    j.at("consistent").get_to(r.consistent);
}

inline void to_json(nlohmann::json& j, const Inconsistency& i) {
    j = {{"line", i.line}, {"graph6", i.graph6}, {"theorem", i.theorem}, {"item", i.item}};
}
inline void from_json(const nlohmann::json& j, Inconsistency& i) {
    j.at("line").get_to(i.line);
    j.at("graph6").get_to(i.graph6);
    j.at("theorem").get_to(i.theorem);
    j.at("item").get_to(i.item);
}

inline void to_json(nlohmann::json& j, const SkippedLine& s) {
    j = {{"line", s.line}, {"text", s.text}, {"reason", s.reason}};
}
inline void from_json(const nlohmann::json& j, SkippedLine& s) {
    j.at("line").get_to(s.line);
    j.at("text").get_to(s.text);
    j.at("reason").get_to(s.reason);
}

inline void to_json(nlohmann::json& j, const ScanSummary& s) {
    j = {{"graphs_processed", s.graphs_processed},
         {"inconsistencies", s.inconsistencies},
         {"skipped", s.skipped},
         {"elapsed_ms", s.elapsed_ms}};
}
inline void from_json(const nlohmann::json& j, ScanSummary& s) {
    j.at("graphs_processed").get_to(s.graphs_processed);
    j.at("inconsistencies").get_to(s.inconsistencies);
    j.at("skipped").get_to(s.skipped);
    j.at("elapsed_ms").get_to(s.elapsed_ms);
}

} // namespace gsearch
