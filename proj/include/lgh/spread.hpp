// The regular spread of PG(3,4) from field reduction of PG(1,16), the
// concrete spread-stabilizing group generated by the three 2x2 matrices over
// GF(16), its line orbits, and the 96-line sets built from them.
//
// Blow-up basis: {1, zeta} over the GF(4) subfield image in GF(16), applied
// to each of the two GF(16) coordinates, so GF(16)^2 is read as GF(4)^4 by
// (x, y) -> (a0, a1, a2, a3) with x = a0 + a1*zeta, y = a2 + a3*zeta.
#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "lgh/pg.hpp"

namespace lgh {

using Mat2x2 = std::array<std::array<gf_t, 2>, 2>; // over GF(16)

// GF(4)-linear action of an invertible 2x2 GF(16) matrix on GF(4)^4,
// scalar-normalized. Multiplicative up to normalization. Throws on singular
// input.
Mat4 blowup(const Mat2x2& m);

// The spread stabilizer's three generators, blown up: diag(zeta^3, 1),
// diag(1, zeta^3), and the transvection (1 0; 1 1).
std::vector<Mat4> spread_group_generators();

struct SpreadModel {
    std::vector<int32_t> lines; // 17, sorted
    int32_t s;                  // the line of (1:0), fixed by the group
};

// One spread line per point of PG(1,16). Requires q = 4.
SpreadModel build_spread(const GeometryTables& t);

struct LinePartition {
    std::vector<int32_t> S;      // spread minus s, 16 lines
    std::vector<int32_t> s_perp; // s and the lines meeting it, 101
    std::vector<int32_t> A;      // the 240 others
};
LinePartition partition_lines(const GeometryTables& t, const SpreadModel& sp);

// Index permutations induced by a collineation. Planes transform by the
// inverse transpose so that incidence is preserved.
std::vector<int32_t> line_perm(const GeometryTables& t, const Mat4& m);
std::vector<int32_t> point_perm(const GeometryTables& t, const Mat4& m);
std::vector<int32_t> plane_perm(const GeometryTables& t, const Mat4& m);

struct GroupAction {
    std::vector<Mat4> generators;                 // canonical forms
    std::vector<Mat4> elements;                   // closure, discovery order
    std::vector<std::vector<int32_t>> line_perms; // parallel to elements
    size_t order() const { return elements.size(); }
};

// Breadth-first closure of the generated matrix group, deduplicated on the
// scalar-canonical form. Throws when the closure exceeds `cap`.
GroupAction generate_group(const GeometryTables& t, const std::vector<Mat4>& gens,
                           size_t cap = 1000000);

// Orbit partition of `domain` (sorted line ids) under the group, each orbit
// sorted, orbits ordered by minimal member. Throws if some group element
// moves a domain line outside the domain.
std::vector<std::vector<int32_t>> orbits(const GroupAction& g,
                                         const std::vector<int32_t>& domain);

// S united with the i-th orbit (1-based) of the spread group on A: 96 lines.
std::vector<int32_t> build_96(const GeometryTables& t, const SpreadModel& sp, int orbit_index);

// Standard correlation: the line whose points are the planes through l,
// read through the id-preserving point/plane identification. Involution.
int32_t duality(const GeometryTables& t, int32_t line);

// Entrywise x -> x^2 on the line's basis, re-canonicalized. Involution for
// q = 4; fixes lines with GF(2)-rational representatives.
int32_t frobenius_line(const GeometryTables& t, int32_t line);

} // namespace lgh
