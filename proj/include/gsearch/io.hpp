#pragma once

#include <cctype>
#include <charconv>
#include <string>
#include <string_view>
#include <vector>

#include "graph.hpp"

namespace gsearch {

inline constexpr std::string_view kGraph6Header = ">>graph6<<";

namespace detail {

inline constexpr int kGraph6Bias = 63;

constexpr std::size_t graph6_body_length(int n) {
    const std::size_t bits = static_cast<std::size_t>(n) * static_cast<std::size_t>(n - 1) / 2;
    return (bits + 5) / 6;
}

inline std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
}

} // namespace detail

/// Decodes one graph6 record (short form, n <= 62). Surrounding whitespace and
/// the optional ">>graph6<<" header are accepted. Errors carry the byte offset
/// into `line` (after trimming).
inline Graph parse_graph6(std::string_view line) {
    using detail::kGraph6Bias;
    line = detail::trim(line);
    std::size_t offset = 0;
    if (line.starts_with(kGraph6Header)) offset = kGraph6Header.size();

    auto fail = [](const std::string& what, std::size_t at) -> ParseError {
        return ParseError("graph6: " + what + " at byte " + std::to_string(at), at);
    };

    if (offset >= line.size()) throw fail("missing length byte", offset);
    const int first = static_cast<unsigned char>(line[offset]);
    if (first == 126) throw fail("long-form length header (n > 62) is not supported", offset);
    if (first < kGraph6Bias || first > 126) throw fail("invalid length byte", offset);
    const int n = first - kGraph6Bias;
    const std::size_t body_begin = offset + 1;
    const std::size_t expected = detail::graph6_body_length(n);

    for (std::size_t i = body_begin; i < line.size(); ++i) {
        const int c = static_cast<unsigned char>(line[i]);
        if (c < kGraph6Bias || c > 126) throw fail("non-printable or out-of-range byte", i);
    }
    if (line.size() - body_begin < expected) throw fail("truncated edge data", line.size());
    if (line.size() - body_begin > expected) throw fail("trailing garbage", body_begin + expected);

    std::vector<Edge> edges;
    std::size_t bit = 0;
    for (Vertex j = 1; j < n; ++j) {
        for (Vertex i = 0; i < j; ++i, ++bit) {
            const int byte = static_cast<unsigned char>(line[body_begin + bit / 6]) - kGraph6Bias;
            if ((byte >> (5 - bit % 6)) & 1) edges.emplace_back(i, j);
        }
    }
    if (bit % 6 != 0) {
        const std::size_t last = body_begin + bit / 6;
        const int byte = static_cast<unsigned char>(line[last]) - kGraph6Bias;
        if ((byte & ((1 << (6 - bit % 6)) - 1)) != 0) throw fail("non-zero padding bits", last);
    }
    return Graph(n, edges);
}

/// Encodes `g` in graph6 short form, without header or newline.
inline std::string emit_graph6(const Graph& g) {
    using detail::kGraph6Bias;
    const int n = g.order();
    if (n > 62) throw SizeLimitError("graph6 short form holds at most 62 vertices");
    std::vector<int> groups(detail::graph6_body_length(n), 0);
    std::size_t bit = 0;
    for (Vertex j = 1; j < n; ++j)
        for (Vertex i = 0; i < j; ++i, ++bit)
            if (g.adjacent(i, j)) groups[bit / 6] |= 1 << (5 - bit % 6);
    std::string out(1, static_cast<char>(n + kGraph6Bias));
    for (int x : groups) out += static_cast<char>(x + kGraph6Bias);
    return out;
}

/// True when `text` is a single token of graph6 bytes whose length matches the
/// vertex count in its header (or a long-form header, which parses to an error).
inline bool looks_like_graph6(std::string_view text) {
    text = detail::trim(text);
    if (text.starts_with(kGraph6Header)) text.remove_prefix(kGraph6Header.size());
    if (text.empty()) return false;
    for (char ch : text) {
        const int c = static_cast<unsigned char>(ch);
        if (c < detail::kGraph6Bias || c > 126) return false;
    }
    const int first = static_cast<unsigned char>(text.front());
    if (first == 126) return true;
    return text.size() == 1 + detail::graph6_body_length(first - detail::kGraph6Bias);
}

/// Parses an edge list: one "u v" pair per line, '#' starts a comment, and an
/// optional leading "n <count>" line fixes the vertex count. Otherwise the
/// graph has max-index + 1 vertices. Errors carry 1-based line numbers.
inline Graph parse_edge_list(std::string_view text) {
    std::vector<Edge> edges;
    int declared = -1;
    int max_index = -1;
    bool seen_content = false;
    std::size_t line_no = 0;

    auto fail = [&](const std::string& what) -> ParseError {
        return ParseError("edge list line " + std::to_string(line_no) + ": " + what, line_no);
    };
    auto to_int = [&](std::string_view tok) {
        int value = 0;
        const auto* end = tok.data() + tok.size();
        const auto [ptr, ec] = std::from_chars(tok.data(), end, value);
        if (ec != std::errc{} || ptr != end || value < 0)
            throw fail("expected a non-negative integer, got '" + std::string(tok) + "'");
        return value;
    };

    while (!text.empty()) {
        ++line_no;
        const auto nl = text.find('\n');
        std::string_view line = text.substr(0, nl);
        text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
        if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);

        std::vector<std::string_view> tokens;
        for (std::size_t i = 0; i < line.size();) {
            while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
            std::size_t j = i;
            while (j < line.size() && !std::isspace(static_cast<unsigned char>(line[j]))) ++j;
            if (j > i) tokens.push_back(line.substr(i, j - i));
            i = j;
        }
        if (tokens.empty()) continue;

        if (!seen_content && tokens[0] == "n") {
            seen_content = true;
            if (tokens.size() != 2) throw fail("expected 'n <count>'");
            declared = to_int(tokens[1]);
            if (declared > kMaxVertices)
                throw SizeLimitError("edge list declares " + std::to_string(declared) +
                                     " vertices; at most " + std::to_string(kMaxVertices) + " supported");
            continue;
        }
        seen_content = true;
        if (tokens.size() != 2) throw fail("expected exactly two vertex indices");
        const int u = to_int(tokens[0]);
        const int v = to_int(tokens[1]);
        if (u == v) throw fail("loop edge " + std::to_string(u) + " " + std::to_string(v));
        if (u >= kMaxVertices || v >= kMaxVertices)
            throw SizeLimitError("vertex index exceeds " + std::to_string(kMaxVertices - 1));
        if (declared >= 0 && (u >= declared || v >= declared))
            throw fail("vertex index outside declared range [0, " + std::to_string(declared) + ")");
        max_index = std::max({max_index, u, v});
        edges.emplace_back(u, v);
    }
    return Graph(declared >= 0 ? declared : max_index + 1, edges);
}

enum class GraphFormat { Auto, Graph6, EdgeList };

/// Parses `text` in the given format; Auto picks graph6 when
/// looks_like_graph6 holds and the edge-list format otherwise.
inline Graph parse_graph(std::string_view text, GraphFormat format = GraphFormat::Auto) {
    if (format == GraphFormat::Auto)
        format = looks_like_graph6(text) ? GraphFormat::Graph6 : GraphFormat::EdgeList;
    return format == GraphFormat::Graph6 ? parse_graph6(text) : parse_edge_list(text);
}

} // namespace gsearch
