#pragma once

#include <numeric>
#include <vector>

#include "graph.hpp"

// Small graph families used throughout the tests.
namespace gsearch::named {

/// P_n: 0-1-...-(n-1).
inline Graph path(int n) {
    std::vector<Edge> e;
    for (Vertex v = 0; v + 1 < n; ++v) e.emplace_back(v, v + 1);
    return Graph(n, e);
}

/// C_n in cyclic order 0..n-1, n >= 3.
inline Graph cycle(int n) {
    if (n < 3) throw InvalidArgumentError("a cycle needs at least 3 vertices");
    std::vector<Edge> e;
    for (Vertex v = 0; v < n; ++v) e.emplace_back(v, (v + 1) % n);
    return Graph(n, e);
}

inline Graph complete(int n) {
    std::vector<Edge> e;
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v) e.emplace_back(u, v);
    return Graph(n, e);
}

/// K_{1,leaves} with center 0.
inline Graph star(int leaves) {
    std::vector<Edge> e;
    for (Vertex v = 1; v <= leaves; ++v) e.emplace_back(0, v);
    return Graph(leaves + 1, e);
}

/// Complete multipartite graph; parts are consecutive index blocks.
inline Graph complete_multipartite(const std::vector<int>& parts) {
    const int n = std::accumulate(parts.begin(), parts.end(), 0);
    std::vector<int> part_of;
    for (std::size_t p = 0; p < parts.size(); ++p) part_of.insert(part_of.end(), parts[p], static_cast<int>(p));
    std::vector<Edge> e;
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v)
            if (part_of[u] != part_of[v]) e.emplace_back(u, v);
    return Graph(n, e);
}

inline Graph complete_bipartite(int a, int b) { return complete_multipartite({a, b}); }

/// k-pan: cycle 0..k-1 with pendant vertex k attached to 0.
inline Graph pan(int k) {
    std::vector<Edge> e;
    for (Vertex v = 0; v < k; ++v) e.emplace_back(v, (v + 1) % k);
    e.emplace_back(0, k);
    return Graph(k + 1, e);
}

// Four-vertex examples with a=0, b=1, c=2, d=3.

/// Paw: ab, bc, ca, cd.
inline Graph paw() { return Graph(4, {{0, 1}, {1, 2}, {2, 0}, {2, 3}}); }

/// Diamond: ab, bc, cd, da, ac (bd missing).
inline Graph diamond() { return Graph(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}, {0, 2}}); }

} // namespace gsearch::named
