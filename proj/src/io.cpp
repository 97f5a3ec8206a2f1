#include "lgh/io.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace lgh {

namespace {

using nlohmann::json;

json fingerprint(const GeometryTables& t) {
    return json{{"q", t.q},
                {"modulus", t.field.modulus()},
                {"table_hash", t.fingerprint_hex()}};
}

void check_fingerprint(const GeometryTables& t, const json& doc) {
    if (!doc.contains("fingerprint")) throw std::runtime_error("missing fingerprint");
    const json& fp = doc.at("fingerprint");
    if (fp.at("q").get<int>() != t.q)
        throw std::runtime_error("fingerprint mismatch: q");
    if (fp.at("modulus").get<unsigned>() != t.field.modulus())
        throw std::runtime_error("fingerprint mismatch: field modulus");
    if (fp.at("table_hash").get<std::string>() != t.fingerprint_hex())
        throw std::runtime_error("fingerprint mismatch: table hash");
}

// nlohmann's default object type is a sorted map, so dump() is byte-stable
// for semantically equal documents.
std::string emit(const json& doc) { return doc.dump(2) + "\n"; }

const char* seed_name(SeedMode m) {
    switch (m) {
        case SeedMode::none: return "none";
        case SeedMode::fix_first_line: return "first-line";
        case SeedMode::fix_first_pencil_pair: return "pencil-pair";
    }
    throw std::logic_error("unknown seed mode");
}

} // namespace

std::string line_set_to_json(const GeometryTables& t, const LineSet& set) {
    json doc{{"fingerprint", fingerprint(t)},
             {"size", set.lines.size()},
             {"lines", set.lines}};
    return emit(doc);
}

LineSet line_set_from_json(const GeometryTables& t, const std::string& text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& e) {
        throw std::runtime_error(std::string("invalid JSON: ") + e.what());
    }
    try {
        check_fingerprint(t, doc);
        std::vector<int32_t> lines = doc.at("lines").get<std::vector<int32_t>>();
        if (doc.contains("size") && doc.at("size").get<size_t>() != lines.size())
            throw std::runtime_error("size field disagrees with line count");
        return make_line_set(t, std::move(lines));
    } catch (const json::exception& e) {
        throw std::runtime_error(std::string("malformed line set document: ") + e.what());
    }
}

std::string violation_to_json(const GeometryTables& t, const Violation& v) {
    json doc{{"fingerprint", fingerprint(t)},
             {"violation",
              json{{"pencil", json{{"point", v.pencil.point}, {"plane", v.pencil.plane}}},
                   {"hits", v.hits}}}};
    return emit(doc);
}

std::string search_report_to_json(const GeometryTables& t, const SearchConfig& cfg,
                                  const SearchReport& rep) {
    json found = json::array();
    for (const LineSet& s : rep.found) found.push_back(s.lines);
    json histogram = json::object();
    for (auto& [size, count] : rep.size_histogram)
        histogram[std::to_string(size)] = count;
    json doc{{"fingerprint", fingerprint(t)},
             {"config",
              json{{"budget_nodes", cfg.node_budget},
                   {"min_size", cfg.min_size},
                   {"max_size", cfg.max_size},
                   {"seed", seed_name(cfg.seed)}}},
             {"found", found},
             {"nodes", rep.nodes},
             {"exhausted", rep.exhausted},
             {"size_histogram", histogram}};
    return emit(doc);
}

std::string graph_to_json(const Graph& g) {
    json edges = json::array();
    for (int u = 0; u < g.n; ++u)
        for (int v = u + 1; v < g.n; ++v)
            if (g.adjacent(u, v)) edges.push_back(json::array({u, v}));
    json doc{{"n", g.n}, {"labels", g.labels}, {"edges", edges}};
    return emit(doc);
}

std::string read_text_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open for reading: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void write_text_file(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot open for writing: " + path);
    out << text;
    if (!out) throw std::runtime_error("write failed: " + path);
}

} // namespace lgh
