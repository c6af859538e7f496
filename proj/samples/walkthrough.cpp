// Small tour of the library on the paw: run searches, validate an ordering,
// compare two paradigms and check the structural classes.

#include <iostream>

#include <gsearch/gsearch.hpp>

using namespace gsearch;

namespace {

void print(const VertexOrdering& o) {
    for (std::size_t i = 0; i < o.size(); ++i) std::cout << (i ? " " : "") << o[i];
}

} // namespace

int main() {
    const Graph paw = named::paw(); // triangle 0-1-2, pendant 3 on 2
    std::cout << "paw: " << emit_graph6(paw) << "\n";

    for (SearchKind k : kAllSearchKinds) {
        std::cout << to_string(k) << " from 2: ";
        print(run_search(paw, k, TieBreak::min_index(), 2));
        std::cout << "  (" << enumerate_orderings(paw, k).orderings.size() << " orderings)\n";
    }

    const VertexOrdering sigma{2, 0, 3, 1};
    for (SearchKind k : {SearchKind::BFS, SearchKind::LexBFS}) {
        const Verdict v = is_search_ordering(paw, sigma, k);
        std::cout << "2 0 3 1 as " << to_string(k) << ": " << (v.valid ? "valid" : "invalid");
        if (!v.valid) std::cout << " - " << v.reason;
        std::cout << "\n";
    }

    const auto rep = orderings_subset(paw, SearchKind::BFS, SearchKind::LexBFS);
    std::cout << "BFS subset LexBFS: " << (rep.verdict ? "yes" : "no");
    if (rep.witness) {
        std::cout << ", witness ";
        print(rep.witness->ordering);
    }
    std::cout << "\n";

    for (Theorem t : kAllTheorems) {
        const auto r = check_theorem(paw, t);
        std::cout << "theorem " << to_string(t) << ": class " << (r.structural_prediction ? "yes" : "no");
        if (r.obstruction) std::cout << " (contains " << to_string(r.obstruction->pattern) << ")";
        std::cout << ", consistent " << (r.consistent ? "yes" : "no") << "\n";
    }
}
