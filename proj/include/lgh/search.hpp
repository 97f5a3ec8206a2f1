// Budgeted depth-first enumeration of hyperovals of the line Grassmannian of
// PG(3,4): sets of lines meeting every pencil in 0 or 2 elements, built in
// increasing line-id order with pencil-constraint propagation.
#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "lgh/hyperoval.hpp"

namespace lgh {

enum class SeedMode {
    none,                 // start from the empty set
    fix_first_line,       // fix the least external line of the standard quadric
    fix_first_pencil_pair // fix the least meeting pair of the orbit-1 96-set
};

struct SearchConfig {
    long long node_budget = 1000000; // line additions before giving up
    int min_size = 1;                // emit complete states in this range
    int max_size = 96;
    SeedMode seed = SeedMode::none;
    int threads = 0; // accepted as a hint; the search itself runs serially
};

struct SearchReport {
    std::vector<LineSet> found; // re-verified hyperovals, sorted by line ids
    long long nodes = 0;        // line additions performed (seeds not counted)
    bool exhausted = false;     // budget ran out before the space closed
    // nonempty complete states encountered, by size, in or out of the
    // emission range
    std::map<int, long long> size_histogram;
};

// Enumerates complete (0,2)-states reachable from the seed, emitting those
// with min_size <= size <= max_size. Deterministic for a fixed config.
SearchReport enumerate_hyperovals(const GeometryTables& t, const SearchConfig& cfg);

// Equivalence signature: equal for sets in the same collineation orbit,
// different signatures prove inequivalence.
struct SetSignature {
    int32_t size = 0;
    std::vector<uint8_t> graph_form; // canonical collinearity-graph bytes
    int64_t point_cliques = 0;
    int64_t plane_cliques = 0;
    bool operator==(const SetSignature&) const = default;
    auto operator<=>(const SetSignature&) const = default;
};
// The set must verify as a hyperoval; throws std::invalid_argument otherwise.
SetSignature set_signature(const GeometryTables& t, const LineSet& set);

} // namespace lgh
