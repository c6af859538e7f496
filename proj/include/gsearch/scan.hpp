#pragma once

#include <algorithm>
#include <atomic>
#include <chrono>
#include <istream>
#include <string>
#include <thread>
#include <vector>

#include "equivalence.hpp"
#include "io.hpp"

namespace gsearch {

/// A theorem item whose behavior disagreed with the structural prediction,
/// or "prediction" when the structural and detector classes disagree.
struct Inconsistency {
    std::size_t line = 0; ///< 1-based input line
    std::string graph6;
    Theorem theorem = Theorem::A;
    std::string item;

    friend bool operator==(const Inconsistency&, const Inconsistency&) = default;
};

struct SkippedLine {
    std::size_t line = 0;
    std::string text;
    std::string reason;

    friend bool operator==(const SkippedLine&, const SkippedLine&) = default;
};

struct ScanSummary {
    std::size_t graphs_processed = 0;
    std::vector<Inconsistency> inconsistencies; ///< sorted by line, then theorem order
    std::vector<SkippedLine> skipped;
    std::int64_t elapsed_ms = 0;

    friend bool operator==(const ScanSummary&, const ScanSummary&) = default;
};

struct ScanOptions {
    std::vector<Theorem> theorems{kAllTheorems.begin(), kAllTheorems.end()};
    unsigned jobs = 1;
    EquivalenceOptions equivalence{};
};

namespace detail {

struct LineOutcome {
    bool processed = false;
    std::optional<SkippedLine> skipped;
    std::vector<Inconsistency> found;
};

inline LineOutcome scan_line(std::size_t line_no, const std::string& text, const ScanOptions& opt) {
    LineOutcome out;
    Graph g;
    try {
        g = parse_graph6(text);
        detail::guard(g, opt.equivalence);
    } catch (const Error& e) {
        out.skipped = SkippedLine{line_no, text, e.what()};
        return out;
    }
    const std::string canonical = emit_graph6(g);
    for (Theorem t : opt.theorems) {
        const TheoremReport r = check_theorem(g, t, opt.equivalence);
        if (r.consistent) continue;
        if (r.forbidden_free != r.structural_prediction)
            out.found.push_back({line_no, canonical, t, "prediction"});
        for (const auto& item : r.items)
            if (item.report.truncated || item.report.verdict != r.structural_prediction)
                out.found.push_back({line_no, canonical, t, item.label});
    }
    out.processed = true;
    return out;
}

} // namespace detail

/// Checks every graph6 line of `in` against the selected theorems using
/// `opt.jobs` worker threads. Blank lines are ignored; unparsable,
/// disconnected or oversized graphs are skipped and reported. The result does
/// not depend on the number of jobs.
inline ScanSummary scan_graph6(std::istream& in, const ScanOptions& opt) {
    const auto started = std::chrono::steady_clock::now();
    std::vector<std::pair<std::size_t, std::string>> lines;
    std::string text;
    for (std::size_t no = 1; std::getline(in, text); ++no) {
        if (!text.empty() && text.back() == '\r') text.pop_back();
        if (text.find_first_not_of(" \t") == std::string::npos) continue;
        lines.emplace_back(no, text);
    }

    std::vector<detail::LineOutcome> outcomes(lines.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i; (i = next.fetch_add(1)) < lines.size();)
            outcomes[i] = detail::scan_line(lines[i].first, lines[i].second, opt);
    };
    const unsigned jobs = std::max(1U, std::min<unsigned>(opt.jobs, static_cast<unsigned>(std::max<std::size_t>(1, lines.size()))));
    {
        std::vector<std::jthread> pool;
        for (unsigned j = 1; j < jobs; ++j) pool.emplace_back(worker);
        worker();
    }

    ScanSummary summary;
    for (auto& o : outcomes) {
        if (o.processed) ++summary.graphs_processed;
        if (o.skipped) summary.skipped.push_back(std::move(*o.skipped));
        for (auto& f : o.found) summary.inconsistencies.push_back(std::move(f));
    }
    summary.elapsed_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                             std::chrono::steady_clock::now() - started)
                             .count();
    return summary;
}

} // namespace gsearch
