#pragma once

#include <algorithm>
#include <array>
#include <cctype>
#include <string>
#include <string_view>

#include "error.hpp"

namespace gsearch {

enum class SearchKind { Generic, BFS, DFS, LexBFS, LexDFS, MNS, MCS };

inline constexpr std::array<SearchKind, 7> kAllSearchKinds = {
    SearchKind::Generic, SearchKind::BFS,    SearchKind::DFS, SearchKind::LexBFS,
    SearchKind::LexDFS,  SearchKind::MNS,    SearchKind::MCS};

constexpr std::string_view to_string(SearchKind kind) {
    switch (kind) {
    case SearchKind::Generic: return "Generic";
    case SearchKind::BFS: return "BFS";
    case SearchKind::DFS: return "DFS";
    case SearchKind::LexBFS: return "LexBFS";
    case SearchKind::LexDFS: return "LexDFS";
    case SearchKind::MNS: return "MNS";
    case SearchKind::MCS: return "MCS";
    }
    return "?";
}

/// Case-insensitive; also accepts the short forms "gen", "lbfs" and "ldfs".
inline SearchKind parse_search_kind(std::string_view text) {
    std::string lower(text);
    std::transform(lower.begin(), lower.end(), lower.begin(),
                   [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
    if (lower == "generic" || lower == "gen") return SearchKind::Generic;
    if (lower == "bfs") return SearchKind::BFS;
    if (lower == "dfs") return SearchKind::DFS;
    if (lower == "lexbfs" || lower == "lbfs") return SearchKind::LexBFS;
    if (lower == "lexdfs" || lower == "ldfs") return SearchKind::LexDFS;
    if (lower == "mns") return SearchKind::MNS;
    if (lower == "mcs") return SearchKind::MCS;
    throw InvalidArgumentError("unknown search kind '" + std::string(text) + "'");
}

} // namespace gsearch
