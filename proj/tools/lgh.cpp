// Command-line front end: construct the two hyperoval families, verify and
// analyze line sets, export graphs, run the budgeted search.
//
// Exit codes: 0 success, 1 property-check failure (JSON witness on stdout),
// 2 usage or input error. Structured output goes to stdout and is
// byte-identical across runs and thread counts; progress notes and the
// geometry fingerprint go to stderr.
#include "lgh/graph.hpp"
#include "lgh/hyperoval.hpp"
#include "lgh/io.hpp"
#include "lgh/pg.hpp"
#include "lgh/quadric.hpp"
#include "lgh/search.hpp"
#include "lgh/spread.hpp"

#include <cstdlib>
#include <iostream>
#include <map>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

using namespace lgh;
using nlohmann::json;

namespace {

constexpr int kOk = 0;
constexpr int kPropertyFail = 1;
constexpr int kUsage = 2;

int env_threads() {
    const char* v = std::getenv("HYPEROVAL_THREADS");
    if (!v || !*v) return 0;
    char* end = nullptr;
    long n = std::strtol(v, &end, 10);
    if (end == v || *end || n < 0) return 0;
    return (int)n;
}

json fingerprint(const GeometryTables& t) {
    return json{{"q", t.q},
                {"modulus", t.field.modulus()},
                {"table_hash", t.fingerprint_hex()}};
}

void log_fingerprint(const GeometryTables& t) {
    std::cerr << "geometry q=" << t.q << " modulus=" << t.field.modulus()
              << " table_hash=" << t.fingerprint_hex() << "\n";
}

void emit(const std::string& text, const std::string& out) {
    if (out.empty())
        std::cout << text;
    else
        write_text_file(out, text);
}

void emit_doc(const json& doc, const std::string& out) { emit(doc.dump(2) + "\n", out); }

// Shared by every subcommand that reads a line-set file.
LineSet load_set(const GeometryTables& t, const std::string& path) {
    return line_set_from_json(t, read_text_file(path));
}

json degree_histogram(const std::vector<int>& degrees) {
    std::map<int, int> h;
    for (int d : degrees) ++h[d];
    json out = json::object();
    for (auto& [d, n] : h) out[std::to_string(d)] = n;
    return out;
}

int run_stats(int q) {
    GeometryTables t = build_tables(q);
    log_fingerprint(t);
    long long pencils = (long long)t.n_points() * (q * q + q + 1);
    json doc{{"fingerprint", fingerprint(t)},
             {"points", t.n_points()},
             {"lines", t.n_lines()},
             {"planes", t.n_planes()},
             {"pencils", pencils},
             {"lines_per_pencil", q + 1},
             {"pencils_per_line", (q + 1) * (q + 1)}};
    if (t.pencils_materialized() && (long long)t.pencils.size() != pencils) {
        std::cerr << "pencil table size disagrees with count formula\n";
        return kPropertyFail;
    }
    emit_doc(doc, "");
    return kOk;
}

int run_construct(const GeometryTables& t, const std::string& kind, int orbit,
                  const std::string& out) {
    std::vector<int32_t> lines;
    if (kind == "quadric72") {
        lines = external_lines(t, standard_hyperbolic());
    } else { // spread96, enforced by the option check
        SpreadModel sp = build_spread(t);
        lines = build_96(t, sp, orbit);
    }
    emit(line_set_to_json(t, make_line_set(t, lines)), out);
    return kOk;
}

int run_verify(const GeometryTables& t, const std::string& in) {
    LineSet set = load_set(t, in);
    if (auto v = verify_hyperoval(t, set)) {
        emit(violation_to_json(t, *v), "");
        return kPropertyFail;
    }
    emit_doc(json{{"fingerprint", fingerprint(t)}, {"ok", true}, {"size", set.lines.size()}},
             "");
    return kOk;
}

int run_census(const GeometryTables& t, const std::string& in) {
    LineSet set = load_set(t, in);
    if (auto v = verify_hyperoval(t, set)) {
        emit(violation_to_json(t, *v), "");
        return kPropertyFail;
    }
    DegreeCensus dc = degree_census(t, set);
    SixCliqueCensus scc = six_clique_census(t, collinearity_graph(t, set));
    json doc{{"fingerprint", fingerprint(t)},
             {"size", set.lines.size()},
             {"point_degrees", degree_histogram(dc.point_degree)},
             {"plane_degrees", degree_histogram(dc.plane_degree)},
             {"six_cliques",
              json{{"point", scc.point_cliques.size()}, {"plane", scc.plane_cliques.size()}}}};
    emit_doc(doc, "");
    return kOk;
}

int run_graph(const GeometryTables& t, const std::string& in, const std::string& format,
              const std::string& out) {
    LineSet set = load_set(t, in);
    Graph g = collinearity_graph(t, set);
    if (format == "graph6") {
        emit(to_graph6(g) + "\n", out);
    } else {
        json doc = json::parse(graph_to_json(g));
        doc["fingerprint"] = fingerprint(t);
        emit_doc(doc, out);
    }
    return kOk;
}

int run_local_check(const GeometryTables& t, const std::string& in) {
    LineSet set = load_set(t, in);
    if (auto v = verify_hyperoval(t, set)) {
        emit(violation_to_json(t, *v), "");
        return kPropertyFail;
    }
    Graph g = collinearity_graph(t, set);
    const SRGParams grid{25, 8, 3, 2};
    static const std::vector<uint8_t> rook_form = canonical_form(rook_graph(5));
    for (int v = 0; v < g.n; ++v) {
        std::string reason;
        if (g.degree(v) != 25) {
            reason = "degree is not 25";
        } else {
            Graph loc = local_graph(g, v);
            auto params = srg_check(loc);
            if (!params || !(*params == grid))
                reason = "local graph is not srg(25,8,3,2)";
            else if (canonical_form(loc) != rook_form)
                reason = "local graph is not the 5x5 rook graph";
        }
        if (!reason.empty()) {
            emit_doc(json{{"fingerprint", fingerprint(t)},
                          {"vertex", v},
                          {"line", g.labels[v]},
                          {"reason", reason}},
                     "");
            return kPropertyFail;
        }
    }
    emit_doc(json{{"fingerprint", fingerprint(t)},
                  {"vertices", g.n},
                  {"degree", 25},
                  {"all_local_rook", true}},
             "");
    return kOk;
}

int run_prop3(const GeometryTables& t, const std::string& in, int threads) {
    LineSet set = load_set(t, in);
    if (auto v = verify_hyperoval(t, set)) {
        emit(violation_to_json(t, *v), "");
        return kPropertyFail;
    }
    std::cerr << "scanning hyperbolic forms...\n";
    HyperbolicExternals he = hyperbolic_external_sets(t, threads);
    std::cerr << "forms: " << he.forms.size() << "\n";
    json witnesses = json::array();
    for (int32_t l : set.lines) {
        Prop3Result r = prop3_check(t, set, l, he);
        if (!r.found) {
            emit_doc(json{{"fingerprint", fingerprint(t)},
                          {"line", l},
                          {"reason", "no hyperbolic quadric matches this neighborhood"}},
                     "");
            return kPropertyFail;
        }
        witnesses.push_back(json{{"line", l},
                                 {"scan_index", r.scan_index},
                                 {"form", r.witness.coeffs}});
    }
    emit_doc(json{{"fingerprint", fingerprint(t)},
                  {"size", set.lines.size()},
                  {"all_witnessed", true},
                  {"witnesses", witnesses}},
             "");
    return kOk;
}

int run_aut(const GeometryTables& t, const std::string& in) {
    LineSet set = load_set(t, in);
    Graph g = collinearity_graph(t, set);
    AutomorphismGroup aut = automorphism_group(g);
    emit_doc(json{{"fingerprint", fingerprint(t)},
                  {"vertices", g.n},
                  {"order", aut.order},
                  {"generators", aut.generators.size()}},
             "");
    return kOk;
}

int run_search(const GeometryTables& t, const SearchConfig& cfg, const std::string& out) {
    SearchReport rep = enumerate_hyperovals(t, cfg);
    std::cerr << "nodes=" << rep.nodes << " found=" << rep.found.size()
              << (rep.exhausted ? " (budget exhausted)" : "") << "\n";
    emit(search_report_to_json(t, cfg, rep), out);
    return kOk;
}

int run_generalize(int q, bool long_running) {
    SkewGeometry sg = skew_geometry(q, long_running);
    GeometryTables t = build_tables(q);
    log_fingerprint(t);
    json histogram = json::object();
    for (auto& [k, n] : sg.histogram) histogram[std::to_string(k)] = n;
    emit_doc(json{{"fingerprint", fingerprint(t)},
                  {"size", sg.set.lines.size()},
                  {"histogram", histogram}},
             "");
    return kOk;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"hyperovals of the line Grassmannian of PG(3,4)"};
    app.require_subcommand(1);

    int threads = env_threads();
    app.add_option("--threads", threads,
                   "worker thread hint, 0 = hardware (env HYPEROVAL_THREADS)");

    int stats_q = 4;
    CLI::App* stats = app.add_subcommand("stats", "geometry counts");
    stats->add_option("--q", stats_q, "field size")->check(CLI::IsMember({2, 4, 8, 16}));

    std::string kind, out;
    int orbit = 1;
    CLI::App* construct = app.add_subcommand("construct", "build a hyperoval line set");
    construct->add_option("kind", kind, "quadric72 or spread96")
        ->required()
        ->check(CLI::IsMember({"quadric72", "spread96"}));
    construct->add_option("--orbit", orbit, "orbit choice for spread96")
        ->check(CLI::Range(1, 3));
    construct->add_option("--out", out, "output file (default stdout)");

    std::string in;
    CLI::App* verify = app.add_subcommand("verify", "check the hyperoval property");
    verify->add_option("--in", in, "line set JSON")->required();

    CLI::App* census = app.add_subcommand("census", "degree and 6-clique census");
    census->add_option("--in", in, "line set JSON")->required();

    std::string format = "graph6";
    CLI::App* graph = app.add_subcommand("graph", "export the collinearity graph");
    graph->add_option("--in", in, "line set JSON")->required();
    graph->add_option("--format", format, "graph6 or json")
        ->check(CLI::IsMember({"graph6", "json"}));
    graph->add_option("--out", out, "output file (default stdout)");

    CLI::App* local = app.add_subcommand("local-check", "local 5x5 grid property");
    local->add_option("--in", in, "line set JSON")->required();

    CLI::App* prop3 = app.add_subcommand("prop3", "local quadric witness for every line");
    prop3->add_option("--in", in, "line set JSON")->required();

    CLI::App* aut = app.add_subcommand("aut", "collinearity graph automorphism group");
    aut->add_option("--in", in, "line set JSON")->required();

    SearchConfig cfg;
    std::string seed = "none";
    CLI::App* search = app.add_subcommand("search", "budgeted hyperoval enumeration");
    search->add_option("--min-size", cfg.min_size, "smallest size to report");
    search->add_option("--max-size", cfg.max_size, "largest size to explore");
    search->add_option("--budget-nodes", cfg.node_budget, "node budget");
    search->add_option("--seed", seed, "none, first-line or pencil-pair")
        ->check(CLI::IsMember({"none", "first-line", "pencil-pair"}));
    search->add_option("--out", out, "report file (default stdout)");

    int gen_q = 8;
    bool long_running = false;
    CLI::App* gen = app.add_subcommand("generalize", "skew-line geometry for larger fields");
    gen->add_option("--q", gen_q, "field size")->check(CLI::IsMember({4, 8, 16}));
    gen->add_flag("--long-running", long_running, "allow the q=16 scan");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kUsage;
    }

    try {
        if (app.got_subcommand(stats)) return run_stats(stats_q);
        if (app.got_subcommand(gen)) return run_generalize(gen_q, long_running);

        GeometryTables t = build_tables(4);
        log_fingerprint(t);
        if (app.got_subcommand(construct)) return run_construct(t, kind, orbit, out);
        if (app.got_subcommand(verify)) return run_verify(t, in);
        if (app.got_subcommand(census)) return run_census(t, in);
        if (app.got_subcommand(graph)) return run_graph(t, in, format, out);
        if (app.got_subcommand(local)) return run_local_check(t, in);
        if (app.got_subcommand(prop3)) return run_prop3(t, in, threads);
        if (app.got_subcommand(aut)) return run_aut(t, in);
        if (app.got_subcommand(search)) {
            cfg.threads = threads;
            if (seed == "first-line")
                cfg.seed = SeedMode::fix_first_line;
            else if (seed == "pencil-pair")
                cfg.seed = SeedMode::fix_first_pencil_pair;
            return run_search(t, cfg, out);
        }
        std::cerr << "no subcommand\n";
        return kUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    }
}
