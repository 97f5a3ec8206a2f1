// The hyperoval predicate on pencils of PG(3,q), degree censuses, the dual
// hyperoval check inside a plane, the local-quadric witness search, and the
// skew-line geometry for larger even q.
#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "lgh/pg.hpp"
#include "lgh/quadric.hpp"

namespace lgh {

struct LineSet {
    int q = 0;
    std::vector<int32_t> lines; // sorted, distinct
};

// Sorts, deduplicates and validates the indices.
LineSet make_line_set(const GeometryTables& t, std::vector<int32_t> lines);

struct Violation {
    Pencil pencil;
    std::vector<int32_t> hits; // set lines in the pencil, |hits| not in {0,2}
};

// A hyperoval meets every pencil in 0 or 2 lines. Returns the first
// violating pencil in (point, plane) order, or nullopt when the set passes.
// Works for any supported q; needs no materialized pencil table.
std::optional<Violation> verify_hyperoval(const GeometryTables& t, const LineSet& set);

struct DegreeCensus {
    std::vector<int> point_degree; // set lines through each point
    std::vector<int> plane_degree; // set lines inside each plane
};
DegreeCensus degree_census(const GeometryTables& t, const LineSet& set);

// True iff every point of the plane lies on 0 or 2 of the six lines.
// All lines must lie in the plane and be distinct.
bool dual_hyperoval_check(const GeometryTables& t, int32_t plane,
                          const std::vector<int32_t>& six);

struct Prop3Result {
    bool found = false;
    QForm witness{};        // hyperbolic form whose external set agrees locally
    int64_t scan_index = -1; // position in the hyperbolic scan order
};

// Searches the precomputed hyperbolic external sets for a quadric whose
// 72-line hyperoval has the same closed neighborhood of `line` as `set`
// does. First witness in scan order; `found` false would falsify the claim
// for this input. Requires line in set and set verified.
Prop3Result prop3_check(const GeometryTables& t, const LineSet& set, int32_t line,
                        const HyperbolicExternals& he);

struct SkewGeometry {
    LineSet set;                       // external lines of the standard quadric
    std::map<int, int64_t> histogram;  // |pencil meet set| -> pencil count
};

// External lines of the standard hyperbolic quadric in PG(3,q) with the full
// pencil-intersection histogram; support must be {0, q/2} for q >= 4.
// q = 16 builds a large table and must be enabled explicitly.
SkewGeometry skew_geometry(int q, bool allow_long = false);

} // namespace lgh
