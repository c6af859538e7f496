// gsearch: command-line front end for the search-ordering library.
//
// Exit codes: 0 success/consistent, 1 invalid ordering or inequivalent,
// 2 parse or usage error, 3 disconnected graph, 4 enumeration truncated.

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <charconv>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <gsearch/gsearch.hpp>
#include <gsearch/report_json.hpp>

namespace {

using namespace gsearch;
using json = nlohmann::json;

enum ExitCode : int { kOk = 0, kNegative = 1, kInputError = 2, kDisconnected = 3, kTruncated = 4 };

struct GraphInput {
    std::string path = "-";
    std::string format = "auto";
    std::string labels_path;
};

/// Optional vertex names read from a "name index" per line file.
class Labels {
public:
    Labels() = default;

    explicit Labels(const std::string& path) {
        std::ifstream in(path);
        if (!in) throw InvalidArgumentError("cannot open label file '" + path + "'");
        std::string line;
        for (std::size_t no = 1; std::getline(in, line); ++no) {
            if (const auto h = line.find('#'); h != std::string::npos) line.erase(h);
            std::istringstream ls(line);
            std::string name;
            Vertex v = -1;
            if (!(ls >> name)) continue;
            if (!(ls >> v) || v < 0) throw ParseError("label file line " + std::to_string(no) + ": expected 'name index'", no);
            by_name_[name] = v;
            names_[v] = name;
        }
    }

    Vertex resolve(const std::string& token) const {
        if (auto it = by_name_.find(token); it != by_name_.end()) return it->second;
        Vertex v = 0;
        const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), v);
        if (ec != std::errc{} || ptr != token.data() + token.size())
            throw InvalidArgumentError("'" + token + "' is neither a vertex index nor a known label");
        return v;
    }

    std::string name(Vertex v) const {
        if (auto it = names_.find(v); it != names_.end()) return it->second;
        return std::to_string(v);
    }

private:
    std::map<std::string, Vertex> by_name_;
    std::map<Vertex, std::string> names_;
};

std::string slurp(const std::string& path) {
    std::ostringstream buf;
    if (path == "-") {
        buf << std::cin.rdbuf();
    } else {
        std::ifstream in(path);
        if (!in) throw InvalidArgumentError("cannot open '" + path + "'");
        buf << in.rdbuf();
    }
    return buf.str();
}

Graph load_graph(const GraphInput& in) {
    GraphFormat fmt = GraphFormat::Auto;
    if (in.format == "graph6") fmt = GraphFormat::Graph6;
    else if (in.format == "edgelist") fmt = GraphFormat::EdgeList;
    return parse_graph(slurp(in.path), fmt);
}

Labels load_labels(const GraphInput& in) {
    return in.labels_path.empty() ? Labels() : Labels(in.labels_path);
}

VertexOrdering parse_ordering(const std::string& text, const Labels& labels) {
    std::vector<Vertex> order;
    std::string token;
    for (char ch : text + ",") {
        if (ch == ',' || std::isspace(static_cast<unsigned char>(ch))) {
            if (!token.empty()) order.push_back(labels.resolve(token));
            token.clear();
        } else {
            token += ch;
        }
    }
    return VertexOrdering(std::move(order));
}

std::string format_ordering(const VertexOrdering& o, const Labels& labels) {
    std::string out;
    for (Vertex v : o) out += (out.empty() ? "" : " ") + labels.name(v);
    return out;
}

std::string format_hit(const PatternHit& h, const Labels& labels) {
    std::string out(to_string(h.pattern));
    if (h.pattern == Pattern::KPan) out += "(" + std::to_string(h.k) + ")";
    out += ":";
    for (Vertex v : h.vertices) out += " " + labels.name(v);
    return out;
}

std::string format_failure(const Verdict& v, const Labels& labels) {
    if (v.violation) {
        const auto& p = *v.violation;
        return "triple (" + labels.name(p.a) + ", " + labels.name(p.b) + ", " + labels.name(p.c) + "): " + p.reason;
    }
    return v.reason;
}

// --- subcommands ------------------------------------------------------------

int cmd_classify(const GraphInput& in, bool as_json) {
    const Graph g = load_graph(in);
    const Labels labels = load_labels(in);
    require_connected(g);
    const ClassLabel cls = recognize_structure(g);

    std::optional<PatternHit> why_a, why_b, why_c;
    if (!*cls.class_a) why_a = detail::forbidden_obstruction(g, Theorem::A);
    if (!*cls.class_b) why_b = detail::forbidden_obstruction(g, Theorem::B);
    if (!*cls.class_c) why_c = detail::forbidden_obstruction(g, Theorem::C);

    if (as_json) {
        json j{{"graph6", emit_graph6(g)},
               {"n", g.order()},
               {"classes", cls},
               {"obstructions",
                {{"class_a", detail::optional_json(why_a)},
                 {"class_b", detail::optional_json(why_b)},
                 {"class_c", detail::optional_json(why_c)}}}};
        std::cout << j.dump(2) << "\n";
        return kOk;
    }
    auto yn = [](std::optional<bool> b) { return !b ? "n/a" : (*b ? "yes" : "no"); };
    auto row = [](const std::string& name, const std::string& value) {
        std::cout << name << std::string(name.size() < 24 ? 24 - name.size() : 1, ' ') << value << "\n";
    };
    row("graph6", emit_graph6(g));
    row("clique", yn(cls.clique));
    row("forest", yn(cls.forest));
    row("tree", yn(cls.tree));
    row("star", yn(cls.star));
    row("cycle", yn(cls.cycle));
    row("complete_bipartite", yn(cls.complete_bipartite));
    row("complete_multipartite", yn(cls.complete_multipartite));
    row("triangle_free", yn(cls.triangle_free));
    row("trivially_perfect", yn(cls.trivially_perfect));
    auto with_hit = [&](std::optional<bool> flag, const std::optional<PatternHit>& hit) {
        std::string s = yn(flag);
        if (hit) s += "   " + format_hit(*hit, labels);
        return s;
    };
    row("class_a", with_hit(cls.class_a, why_a));
    row("class_b", with_hit(cls.class_b, why_b));
    row("class_c", with_hit(cls.class_c, why_c));
    return kOk;
}

int cmd_validate(const GraphInput& in, const std::string& ordering, const std::string& kind, bool as_json) {
    const Graph g = load_graph(in);
    const Labels labels = load_labels(in);
    const VertexOrdering sigma = parse_ordering(ordering, labels);
    const Verdict v = is_search_ordering(g, sigma, parse_search_kind(kind));
    if (as_json) {
        std::cout << json(v).dump(2) << "\n";
    } else if (v.valid) {
        std::cout << "valid " << to_string(v.kind) << " ordering\n";
    } else {
        std::cout << "invalid " << to_string(v.kind) << " ordering: " << format_failure(v, labels) << "\n";
    }
    return v.valid ? kOk : kNegative;
}

int cmd_run(const GraphInput& in, const std::string& kind, std::optional<std::uint64_t> seed,
            const std::string& start, bool as_json) {
    const Graph g = load_graph(in);
    const Labels labels = load_labels(in);
    std::optional<Vertex> first;
    if (!start.empty()) first = labels.resolve(start);
    const TieBreak tb = seed ? TieBreak::seeded(*seed) : TieBreak::min_index();
    const VertexOrdering o = run_search(g, parse_search_kind(kind), tb, first);
    if (as_json)
        std::cout << json(o).dump() << "\n";
    else
        std::cout << format_ordering(o, labels) << "\n";
    return kOk;
}

int cmd_enumerate(const GraphInput& in, const std::string& kind, std::size_t cap, bool as_json) {
    const Graph g = load_graph(in);
    const Labels labels = load_labels(in);
    const Enumeration e = enumerate_orderings(g, parse_search_kind(kind), cap);
    if (as_json) {
        std::cout << json{{"orderings", e.orderings}, {"count", e.orderings.size()}, {"truncated", e.truncated}}.dump()
                  << "\n";
    } else {
        for (const auto& o : e.orderings) std::cout << format_ordering(o, labels) << "\n";
        std::cout << "count " << e.orderings.size() << (e.truncated ? " TRUNCATED" : "") << "\n";
    }
    return e.truncated ? kTruncated : kOk;
}

int cmd_equiv(const GraphInput& in, const std::string& kx, const std::string& ky, const std::string& relation,
              std::size_t cap, bool allow_large, bool as_json) {
    const Graph g = load_graph(in);
    const Labels labels = load_labels(in);
    Relation rel = Relation::Subset;
    if (relation == "equal") rel = Relation::Equal;
    else if (relation != "subset") throw InvalidArgumentError("--relation must be 'subset' or 'equal'");
    EquivalenceOptions opt;
    opt.cap = cap;
    opt.allow_large = allow_large;
    const EquivalenceReport r = orderings_relation(g, parse_search_kind(kx), parse_search_kind(ky), rel, opt);
    if (as_json) {
        std::cout << json(r).dump(2) << "\n";
    } else {
        std::cout << to_string(r.kind_x) << " " << to_string(r.relation) << " " << to_string(r.kind_y) << ": "
                  << (r.verdict ? "true" : "false") << (r.truncated ? " (TRUNCATED)" : "") << "\n";
        if (r.witness)
            std::cout << "witness: " << format_ordering(r.witness->ordering, labels) << "  ("
                      << to_string(r.witness->valid_for) << "-valid, " << to_string(r.witness->invalid_for)
                      << "-invalid: " << format_failure(r.witness->failure, labels) << ")\n";
    }
    if (r.truncated) return kTruncated;
    return r.verdict ? kOk : kNegative;
}

int cmd_scan(const std::string& theorem, unsigned jobs, bool as_json) {
    ScanOptions opt;
    opt.jobs = jobs;
    if (theorem != "all") opt.theorems = {parse_theorem(theorem)};
    const ScanSummary s = scan_graph6(std::cin, opt);
    if (as_json) {
        std::cout << json(s).dump(2) << "\n";
    } else {
        for (const auto& i : s.inconsistencies)
            std::cout << i.graph6 << " " << to_string(i.theorem) << " " << i.item << "\n";
    }
    for (const auto& sk : s.skipped)
        std::cerr << "skipped line " << sk.line << " (" << sk.text << "): " << sk.reason << "\n";
    std::cerr << "processed " << s.graphs_processed << " graphs, " << s.inconsistencies.size()
              << " inconsistencies, " << s.skipped.size() << " skipped, " << s.elapsed_ms << " ms\n";
    return s.inconsistencies.empty() ? kOk : kNegative;
}

void add_input_options(CLI::App* cmd, GraphInput& in, bool with_labels = true) {
    cmd->add_option("input", in.path, "Graph file (graph6 or edge list); '-' or omitted reads stdin");
    cmd->add_option("--format", in.format, "Input format")
        ->check(CLI::IsMember({"auto", "graph6", "edgelist"}));
    if (with_labels) cmd->add_option("--labels", in.labels_path, "Vertex name file: one 'name index' per line");
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Graph search orderings: run, enumerate, validate, classify and compare"};
    app.require_subcommand(1);

    GraphInput in;
    bool as_json = false;
    std::string kind = "Generic";
    std::string kind_x, kind_y, relation = "subset";
    std::string ordering, start, theorem = "all";
    std::optional<std::uint64_t> seed;
    std::size_t cap = kDefaultEnumerationCap;
    unsigned jobs = 1;
    bool allow_large = false;

    auto* classify = app.add_subcommand("classify", "Structural class flags with forbidden-subgraph evidence");
    add_input_options(classify, in);
    classify->add_flag("--json", as_json, "JSON output");

    auto* validate = app.add_subcommand("validate", "Check whether an ordering belongs to a search paradigm");
    add_input_options(validate, in);
    validate->add_option("--ordering", ordering, "Vertices in visit order, comma or space separated")->required();
    validate->add_option("--kind", kind, "Generic, BFS, DFS, LexBFS, LexDFS, MNS or MCS")->required();
    validate->add_flag("--json", as_json, "JSON output");

    auto* run = app.add_subcommand("run", "Run one search and print its ordering");
    add_input_options(run, in);
    run->add_option("--kind", kind, "Search paradigm")->required();
    run->add_option("--seed", seed, "Break ties pseudo-randomly with this seed (default: smallest index)");
    run->add_option("--start", start, "First vertex");
    run->add_flag("--json", as_json, "JSON output");

    auto* enumerate = app.add_subcommand("enumerate", "Print every ordering a paradigm can produce");
    add_input_options(enumerate, in);
    enumerate->add_option("--kind", kind, "Search paradigm")->required();
    enumerate->add_option("--cap", cap, "Maximum number of orderings")->check(CLI::PositiveNumber);
    enumerate->add_flag("--json", as_json, "JSON output");

    auto* equiv = app.add_subcommand("equiv", "Compare the ordering sets of two paradigms");
    add_input_options(equiv, in);
    equiv->add_option("--kind-x", kind_x, "Left paradigm")->required();
    equiv->add_option("--kind-y", kind_y, "Right paradigm")->required();
    equiv->add_option("--relation", relation, "subset or equal")->check(CLI::IsMember({"subset", "equal"}));
    equiv->add_option("--cap", cap, "Maximum orderings enumerated per direction")->check(CLI::PositiveNumber);
    equiv->add_flag("--allow-large", allow_large, "Lift the 8-vertex size guard");
    equiv->add_flag("--json", as_json, "JSON output");

    auto* scan = app.add_subcommand("scan", "Check theorems on every graph6 line of stdin");
    scan->add_option("--theorem", theorem, "A, B, C, corollary or all")
        ->check(CLI::IsMember({"A", "B", "C", "corollary", "all"}));
    scan->add_option("--jobs", jobs, "Worker threads")->check(CLI::PositiveNumber);
    scan->add_flag("--json", as_json, "Print the full summary as JSON on stdout");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kOk : kInputError;
    }

    try {
        if (*classify) return cmd_classify(in, as_json);
        if (*validate) return cmd_validate(in, ordering, kind, as_json);
        if (*run) return cmd_run(in, kind, seed, start, as_json);
        if (*enumerate) return cmd_enumerate(in, kind, cap, as_json);
        if (*equiv) return cmd_equiv(in, kind_x, kind_y, relation, cap, allow_large, as_json);
        if (*scan) return cmd_scan(theorem, jobs, as_json);
    } catch (const DisconnectedGraphError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kDisconnected;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kInputError;
    }
    return kInputError;
}
