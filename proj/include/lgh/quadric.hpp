// Quadratic forms on GF(q)^4 and their interaction with PG(3,q): point zero
// sets, type classification, line and plane classification, reguli, external
// lines, and exhaustive enumeration of projective form classes.
#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "lgh/bitvec.hpp"
#include "lgh/pg.hpp"

namespace lgh {

// Q(x) = sum c_{ij} x_i x_j over 0 <= i <= j <= 3, coefficients stored in
// lexicographic (i,j) order: 00,01,02,03,11,12,13,22,23,33.
struct QForm {
    std::array<gf_t, 10> coeffs{};
    bool operator==(const QForm&) const = default;
    auto operator<=>(const QForm&) const = default;
};

// Index of c_{ij} in QForm::coeffs.
int qform_coeff_index(int i, int j);

// x0 x1 + x2 x3.
QForm standard_hyperbolic();
// x0 x1 + x2^2 + x2 x3 + w x3^2 with w a generator of GF(4), elliptic over GF(4).
QForm elliptic_example();

enum class QuadricType { hyperbolic, elliptic, degenerate };
const char* to_string(QuadricType t);

struct QuadricClass {
    QuadricType tag;
    int zero_count;    // projective zeros
    int bilinear_rank; // rank of the alternating polar form
};

gf_t evaluate(const GF& f, const QForm& q, const Vec4& p);

// Bit per point id, set when the point lies on the quadric.
BitVec zero_set(const GeometryTables& t, const QForm& q);

int bilinear_rank(const GF& f, const QForm& q);

// Nondegenerate types are separated by zero count: (q+1)^2 hyperbolic,
// q^2+1 elliptic. Bilinear rank < 4 means a singular quadric.
QuadricClass classify(const GeometryTables& t, const QForm& q);

enum class LineClass { contained, secant, tangent, external };
const char* to_string(LineClass c);

// By number of quadric points on the line: q+1, 2, 1, 0.
LineClass classify_line(const GeometryTables& t, const BitVec& zeros, int32_t line);

struct LineCensus {
    int contained = 0, secant = 0, tangent = 0, external = 0;
    int total() const { return contained + secant + tangent + external; }
};
LineCensus line_census(const GeometryTables& t, const BitVec& zeros);

// The two maximal families of pairwise-skew lines contained in a hyperbolic
// quadric, each of size q+1 and covering every quadric point. The family
// containing the smallest line id comes first. Throws on non-hyperbolic input.
std::array<std::vector<int32_t>, 2> reguli(const GeometryTables& t, const QForm& q);

// Number of quadric points on the plane: q+1 (conic) or 2q+1 (two lines)
// when the form is hyperbolic.
int plane_section_size(const GeometryTables& t, const BitVec& zeros, int32_t plane);

// Hyperbolic forms only: every plane section is a conic or a line pair.
struct PlaneCensus {
    int line_pair_planes = 0; // section of size 2q+1
    int conic_planes = 0;     // section of size q+1
};
PlaneCensus plane_census(const GeometryTables& t, const BitVec& zeros);

// Sorted ids of lines disjoint from the quadric.
std::vector<int32_t> external_lines(const GeometryTables& t, const QForm& q);

// One representative per projective class of nonzero forms: first nonzero
// coefficient 1. Classes are indexed 0 .. n_form_classes(q)-1, ordered by the
// position of the first nonzero coefficient and then lexicographically.
int64_t n_form_classes(int q);
QForm form_by_index(int q, int64_t index);

// All form classes satisfying pred, in index order. Parallel scan over fixed
// index chunks, concatenated by chunk, so the output never depends on the
// thread count. Requires q = 4.
std::vector<QForm> scan_forms(const GeometryTables& t,
                              bool (*pred)(const QuadricClass&), int threads = 0);

// External-line sets of every hyperbolic form class, in scan order.
// The heavy precomputation behind the local-quadric oracle.
struct HyperbolicExternals {
    std::vector<QForm> forms;
    std::vector<BitVec> external; // bit per line id, parallel to forms
};
HyperbolicExternals hyperbolic_external_sets(const GeometryTables& t, int threads = 0);

} // namespace lgh
