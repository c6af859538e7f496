#include <gtest/gtest.h>

#include <fstream>
#include <sstream>

#include <gsearch/named_graphs.hpp>
#include <gsearch/report_json.hpp>
#include <gsearch/scan.hpp>

#include "support/oracles.hpp"

using namespace gsearch;

namespace {

template <class T>
T round_trip(const T& value) {
    return nlohmann::json::parse(nlohmann::json(value).dump()).get<T>();
}

ScanSummary scan_text(const std::string& text, unsigned jobs, std::vector<Theorem> ts = {kAllTheorems.begin(), kAllTheorems.end()}) {
    std::istringstream in(text);
    ScanOptions opt;
    opt.jobs = jobs;
    opt.theorems = std::move(ts);
    auto s = scan_graph6(in, opt);
    s.elapsed_ms = 0;
    return s;
}

} // namespace

TEST(Scan, EmptyInput) {
    const auto s = scan_text("", 2);
    EXPECT_EQ(s.graphs_processed, 0U);
    EXPECT_TRUE(s.inconsistencies.empty());
    EXPECT_TRUE(s.skipped.empty());
}

TEST(Scan, SkipsBadLinesAndIgnoresBlanks) {
    const auto s = scan_text("Cx\n\nC`\nnot graph6!\nDhc\n", 1);
    EXPECT_EQ(s.graphs_processed, 2U);
    ASSERT_EQ(s.skipped.size(), 2U);
    EXPECT_EQ(s.skipped[0].line, 3U); // 2K2 is disconnected
    EXPECT_EQ(s.skipped[1].line, 4U);
    EXPECT_TRUE(s.inconsistencies.empty());
}

TEST(Scan, OversizedGraphsAreSkipped) {
    const auto s = scan_text(emit_graph6(named::path(9)) + "\n", 1, {Theorem::A});
    EXPECT_EQ(s.graphs_processed, 0U);
    EXPECT_EQ(s.skipped.size(), 1U);
}

TEST(Scan, ResultIndependentOfJobCount) {
    std::ifstream in(std::string(GSEARCH_TEST_DATA_DIR) + "/connected_upto7.g6");
    std::string text, line;
    for (int i = 0; i < 150 && std::getline(in, line); ++i) text += line + "\n";
    text += "C`\n";
    const auto one = scan_text(text, 1);
    EXPECT_EQ(one, scan_text(text, 3));
    EXPECT_EQ(one, scan_text(text, 8));
    EXPECT_EQ(one.graphs_processed, 150U);
    EXPECT_TRUE(one.inconsistencies.empty());
}

TEST(Json, ReportsRoundTrip) {
    const auto rep = orderings_subset(named::paw(), SearchKind::BFS, SearchKind::LexBFS);
    EXPECT_EQ(round_trip(rep), rep);
    const auto thm = check_theorem(named::pan(4), Theorem::B);
    EXPECT_EQ(round_trip(thm), thm);
    const auto lbl = recognize_structure(Graph(4, {{0, 1}, {2, 3}}));
    EXPECT_EQ(round_trip(lbl), lbl);
    EXPECT_TRUE(nlohmann::json(lbl).at("class_a").is_null());
    const auto s = scan_text("Cx\nC`\n", 1);
    EXPECT_EQ(round_trip(s), s);
    const Inconsistency inc{4, "Cx", Theorem::C, "C2"};
    EXPECT_EQ(round_trip(inc), inc);
}

TEST(Json, FieldShapes) {
    const auto j = nlohmann::json(orderings_subset(named::paw(), SearchKind::BFS, SearchKind::LexBFS));
    EXPECT_EQ(j.at("kind_x"), "BFS");
    EXPECT_EQ(j.at("relation"), "subset");
    EXPECT_EQ(j.at("witness").at("ordering"), nlohmann::json({2, 0, 3, 1}));
    EXPECT_EQ(j.at("witness").at("failure").at("violation").at("b"), 3);
}
