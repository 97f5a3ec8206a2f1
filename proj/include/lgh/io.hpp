// JSON serialization for line sets, search reports and graphs.
//
// Every document embeds the geometry fingerprint (q, field modulus, line
// table hash) so a file produced against one table build cannot be silently
// read against another.
#pragma once

#include "lgh/graph.hpp"
#include "lgh/hyperoval.hpp"
#include "lgh/search.hpp"

#include <string>

namespace lgh {

std::string line_set_to_json(const GeometryTables& t, const LineSet& set);

// Validates shape and fingerprint against the given tables; throws
// std::runtime_error with a human-readable reason on any mismatch.
LineSet line_set_from_json(const GeometryTables& t, const std::string& text);

std::string violation_to_json(const GeometryTables& t, const Violation& v);

std::string search_report_to_json(const GeometryTables& t, const SearchConfig& cfg,
                                  const SearchReport& rep);

// {"n": ..., "labels": [...], "edges": [[u, v], ...]} with u < v ascending.
std::string graph_to_json(const Graph& g);

std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& text);

} // namespace lgh
