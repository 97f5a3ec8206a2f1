// Collinearity graphs of line sets and the graph machinery the structural
// checks need: strongly-regular checks, local graphs, the rook's graph,
// maximal-clique census, and an in-repo partition-refinement engine for
// automorphism groups, canonical forms and isomorphism on small graphs.
#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "lgh/bitvec.hpp"
#include "lgh/hyperoval.hpp"
#include "lgh/permgroup.hpp"

namespace lgh {

struct Graph {
    int n = 0;
    std::vector<int32_t> labels;  // external names, e.g. line ids
    std::vector<BitVec> adj;      // symmetric, irreflexive

    bool adjacent(int u, int v) const { return adj[u].test(v); }
    int degree(int v) const { return (int)adj[v].count(); }
    long edge_count() const {
        long m = 0;
        for (int v = 0; v < n; ++v) m += degree(v);
        return m / 2;
    }
};

Graph make_graph(int n, const std::vector<std::pair<int, int>>& edges,
                 std::vector<int32_t> labels = {});

// Vertices are the set's lines in sorted order; edges join meeting lines.
Graph collinearity_graph(const GeometryTables& t, const LineSet& set);

// Induced subgraph on the neighbors of v; labels carry over.
Graph local_graph(const Graph& g, int v);

// n x n rook's graph: cells of a grid, adjacent in the same row or column.
Graph rook_graph(int n);

bool is_connected(const Graph& g);

struct SRGParams {
    int v, k, lambda, mu;
    bool operator==(const SRGParams&) const = default;
};
// Parameters when g is strongly regular; nullopt otherwise (or n < 3).
std::optional<SRGParams> srg_check(const Graph& g);

// Maximal cliques, each sorted; Bron-Kerbosch with pivoting.
std::vector<std::vector<int>> maximal_cliques(const Graph& g);

struct SixClique {
    std::vector<int> vertices; // sorted vertex indices
    int32_t common;            // the shared point or plane id
};
struct SixCliqueCensus {
    std::vector<SixClique> point_cliques;
    std::vector<SixClique> plane_cliques;
};
// Every maximal clique of a hyperoval graph must be six lines with a common
// point or a common plane (exactly one); anything else throws.
SixCliqueCensus six_clique_census(const GeometryTables& t, const Graph& g);

inline constexpr int kMaxRefineVertices = 200;

struct AutomorphismGroup {
    unsigned long long order = 1;
    std::vector<Perm> generators; // verified automorphisms
};
// Full automorphism group by individualization-refinement with orbit pruning.
// Throws above kMaxRefineVertices.
AutomorphismGroup automorphism_group(const Graph& g);

// Canonically relabeled adjacency matrix, row-major bit-packed; equal bytes
// iff isomorphic (labels ignored).
std::vector<uint8_t> canonical_form(const Graph& g);

bool isomorphic(const Graph& a, const Graph& b);

// Headerless graph6 encoding of the adjacency matrix.
std::string to_graph6(const Graph& g);

} // namespace lgh
