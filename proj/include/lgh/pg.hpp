// Indexed models of PG(3,q): points, lines, planes, pencils, incidence.
//
// Canonical representatives and deterministic ids:
//   - a point is a normalized row 4-vector (first nonzero coordinate 1);
//   - a line is the unique RREF basis of its 2-dimensional row space;
//   - a plane is a normalized dual 4-vector, incidence = zero dot product;
//   - ids are ranks in lexicographic order of the canonical encodings,
//     so they are stable across runs and platforms.
// Planes use the same tuple space as points, so plane k and point k carry
// identical coordinates; the standard correlation is id-preserving.
#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "lgh/gf.hpp"
#include "lgh/linalg.hpp"

namespace lgh {

using Plucker6 = std::array<gf_t, 6>; // (p01,p02,p03,p12,p13,p23)

struct Pencil {
    int32_t point;
    int32_t plane;
};

struct GeometryTables {
    int q = 0;
    GF field{2};

    std::vector<Vec4> points;   // canonical, lex sorted
    std::vector<Mat2x4> lines;  // RREF rows, lex sorted by 8-code encoding
    std::vector<Vec4> planes;   // same tuples as points

    std::vector<std::vector<int32_t>> line_points;  // q+1 per line, sorted
    std::vector<std::vector<int32_t>> line_planes;  // q+1 per line, sorted
    std::vector<std::vector<int32_t>> point_lines;  // q^2+q+1 per point, sorted
    std::vector<std::vector<int32_t>> plane_lines;  // q^2+q+1 per plane, sorted
    std::vector<std::vector<int32_t>> point_planes; // q^2+q+1 per point, sorted

    // Pencils in (point, plane) lexicographic order. Materialized for q <= 4;
    // for larger q the same order is produced on the fly by the consumers.
    std::vector<Pencil> pencils;
    std::vector<std::vector<int32_t>> pencil_lines_tab; // q+1 per pencil
    std::vector<std::vector<int32_t>> line_pencils;     // (q+1)^2 per line

    int n_points() const { return (int)points.size(); }
    int n_lines() const { return (int)lines.size(); }
    int n_planes() const { return (int)planes.size(); }
    bool pencils_materialized() const { return !pencils.empty(); }

    int32_t point_id(const Vec4& v) const;  // canonicalizes, then looks up
    int32_t plane_id(const Vec4& v) const;
    int32_t line_id(const Mat2x4& rref_rows) const;
    // Line id of the span of two arbitrary independent rows.
    int32_t line_id_from_span(Vec4 a, Vec4 b) const;

    bool point_on_plane(int32_t p, int32_t pl) const {
        return dot4(field, points[p], planes[pl]) == 0;
    }
    bool point_on_line(int32_t p, int32_t l) const;
    bool line_in_plane(int32_t l, int32_t pl) const;

    // Rank of `plane` in point_planes[point]; the flag must exist.
    int flag_rank(int32_t point, int32_t plane) const;
    int32_t pencil_index(int32_t point, int32_t plane) const; // materialized only

    // FNV-1a 64 digest of the ordered line encodings.
    uint64_t table_hash() const;
    std::string fingerprint_hex() const;

private:
    std::vector<int32_t> point_by_pack_; // 4-bit packed coords -> id
    std::vector<uint64_t> line_packs_;   // sorted, parallel to lines
    friend GeometryTables build_tables(int q);
};

// q in {2,4,8,16}.
GeometryTables build_tables(int q);

// Canonical RREF line through two distinct points.
Mat2x4 line_through(const GF& f, const Vec4& p1, const Vec4& p2);

// Common point of two distinct lines, or nullopt when skew.
std::optional<Vec4> meet(const GF& f, const Mat2x4& l1, const Mat2x4& l2);
std::optional<int32_t> meet_id(const GeometryTables& t, int32_t l1, int32_t l2);

// The q+1 lines through the pencil's point inside its plane; throws if the
// point is off the plane.
std::vector<int32_t> pencil_lines(const GeometryTables& t, const Pencil& f);

Plucker6 plucker(const GF& f, const Mat2x4& l);

// Klein bilinear pairing; vanishes exactly when the lines meet.
gf_t klein_pairing(const GF& f, const Plucker6& a, const Plucker6& b);

// Plane spanned by a line and a point off it.
int32_t plane_through(const GeometryTables& t, int32_t line, int32_t point);
// Plane spanned by two meeting lines.
int32_t plane_of_meeting_lines(const GeometryTables& t, int32_t l1, int32_t l2);

} // namespace lgh
