#include "lgh/pg.hpp"

#include <algorithm>
#include <cstdio>
#include <stdexcept>

namespace lgh {

namespace {

uint16_t pack_point(const Vec4& v) {
    return (uint16_t)((v[0] << 12) | (v[1] << 8) | (v[2] << 4) | v[3]);
}

uint64_t pack_line(const Mat2x4& m) {
    uint64_t r = 0;
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 4; ++j) r = (r << 8) | m[i][j];
    return r;
}

} // namespace

int32_t GeometryTables::point_id(const Vec4& v) const {
    Vec4 c = normalize4(field, v);
    if (is_zero4(c)) throw std::invalid_argument("point_id: zero vector");
    int32_t id = point_by_pack_[pack_point(c)];
    if (id < 0) throw std::logic_error("point_id: lookup miss");
    return id;
}

int32_t GeometryTables::plane_id(const Vec4& v) const { return point_id(v); }

int32_t GeometryTables::line_id(const Mat2x4& m) const {
    uint64_t key = pack_line(m);
    auto it = std::lower_bound(line_packs_.begin(), line_packs_.end(), key);
    if (it == line_packs_.end() || *it != key)
        throw std::invalid_argument("line_id: not a canonical line encoding");
    return (int32_t)(it - line_packs_.begin());
}

int32_t GeometryTables::line_id_from_span(Vec4 a, Vec4 b) const {
    return line_id(line_through(field, a, b));
}

bool GeometryTables::point_on_line(int32_t p, int32_t l) const {
    const auto& pts = line_points[l];
    return std::binary_search(pts.begin(), pts.end(), p);
}

bool GeometryTables::line_in_plane(int32_t l, int32_t pl) const {
    const auto& pls = line_planes[l];
    return std::binary_search(pls.begin(), pls.end(), pl);
}

int GeometryTables::flag_rank(int32_t point, int32_t plane) const {
    const auto& pp = point_planes[point];
    auto it = std::lower_bound(pp.begin(), pp.end(), plane);
    if (it == pp.end() || *it != plane)
        throw std::invalid_argument("flag_rank: point is not on the plane");
    return (int)(it - pp.begin());
}

int32_t GeometryTables::pencil_index(int32_t point, int32_t plane) const {
    int per_point = q * q + q + 1;
    return point * per_point + flag_rank(point, plane);
}

uint64_t GeometryTables::table_hash() const {
    uint64_t h = 14695981039346656037ull;
    for (const auto& l : lines)
        for (int i = 0; i < 2; ++i)
            for (int j = 0; j < 4; ++j) {
                h ^= l[i][j];
                h *= 1099511628211ull;
            }
    return h;
}

std::string GeometryTables::fingerprint_hex() const {
    char buf[20];
    snprintf(buf, sizeof buf, "0x%016llx", (unsigned long long)table_hash());
    return buf;
}

Mat2x4 line_through(const GF& f, const Vec4& p1, const Vec4& p2) {
    std::vector<Vec4> rows{p1, p2};
    int rank = rref(f, rows);
    if (rank != 2) throw std::invalid_argument("line_through: points are equal or zero");
    return {rows[0], rows[1]};
}

std::optional<Vec4> meet(const GF& f, const Mat2x4& l1, const Mat2x4& l2) {
    if (l1 == l2) throw std::invalid_argument("meet: lines are identical");
    // Left kernel of the stacked 4x4: coefficients of a vanishing combination.
    std::vector<Vec4> cols(4);
    const Vec4* stacked[4] = {&l1[0], &l1[1], &l2[0], &l2[1]};
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) cols[i][j] = (*stacked[j])[i];
    auto kernel = nullspace4(f, cols);
    if (kernel.empty()) return std::nullopt; // rank 4: skew
    const Vec4& c = kernel[0];
    Vec4 p = add4(scale4(f, c[0], l1[0]), scale4(f, c[1], l1[1]));
    if (is_zero4(p)) throw std::logic_error("meet: degenerate kernel");
    return normalize4(f, p);
}

std::optional<int32_t> meet_id(const GeometryTables& t, int32_t l1, int32_t l2) {
    auto p = meet(t.field, t.lines[l1], t.lines[l2]);
    if (!p) return std::nullopt;
    return t.point_id(*p);
}

std::vector<int32_t> pencil_lines(const GeometryTables& t, const Pencil& f) {
    if (!t.point_on_plane(f.point, f.plane))
        throw std::invalid_argument("pencil_lines: (point, plane) is not a flag");
    if (t.pencils_materialized())
        return t.pencil_lines_tab[t.pencil_index(f.point, f.plane)];
    const auto& a = t.point_lines[f.point];
    const auto& b = t.plane_lines[f.plane];
    std::vector<int32_t> out;
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

Plucker6 plucker(const GF& f, const Mat2x4& l) {
    const Vec4& a = l[0];
    const Vec4& b = l[1];
    auto minor = [&](int i, int j) { return (gf_t)(f.mul(a[i], b[j]) ^ f.mul(a[j], b[i])); };
    Plucker6 p{minor(0, 1), minor(0, 2), minor(0, 3), minor(1, 2), minor(1, 3), minor(2, 3)};
    for (int i = 0; i < 6; ++i) {
        if (p[i]) {
            if (p[i] != 1) {
                gf_t s = f.inv(p[i]);
                for (int j = 0; j < 6; ++j) p[j] = f.mul(s, p[j]);
            }
            break;
        }
    }
    return p;
}

gf_t klein_pairing(const GF& f, const Plucker6& a, const Plucker6& b) {
    return (gf_t)(f.mul(a[0], b[5]) ^ f.mul(a[1], b[4]) ^ f.mul(a[2], b[3]) ^
                  f.mul(a[3], b[2]) ^ f.mul(a[4], b[1]) ^ f.mul(a[5], b[0]));
}

int32_t plane_through(const GeometryTables& t, int32_t line, int32_t point) {
    if (t.point_on_line(point, line))
        throw std::invalid_argument("plane_through: point lies on the line");
    std::vector<Vec4> rows{t.lines[line][0], t.lines[line][1], t.points[point]};
    auto ns = nullspace4(t.field, rows);
    if (ns.size() != 1) throw std::logic_error("plane_through: expected rank 3");
    return t.plane_id(ns[0]);
}

int32_t plane_of_meeting_lines(const GeometryTables& t, int32_t l1, int32_t l2) {
    std::vector<Vec4> rows{t.lines[l1][0], t.lines[l1][1], t.lines[l2][0], t.lines[l2][1]};
    auto ns = nullspace4(t.field, rows);
    if (ns.size() != 1)
        throw std::invalid_argument("plane_of_meeting_lines: lines do not span a plane");
    return t.plane_id(ns[0]);
}

GeometryTables build_tables(int q) {
    if (q != 2 && q != 4 && q != 8 && q != 16)
        throw std::invalid_argument("build_tables: q must be one of 2,4,8,16");

    GeometryTables t;
    t.q = q;
    t.field = GF::of_order(q);
    const GF& f = t.field;

    // Points: all normalized tuples, lex sorted.
    for (int first = 0; first < 4; ++first) {
        Vec4 v{0, 0, 0, 0};
        v[first] = 1;
        int nfree = 3 - first;
        int total = 1;
        for (int i = 0; i < nfree; ++i) total *= q;
        for (int combo = 0; combo < total; ++combo) {
            int c = combo;
            for (int i = first + 1; i < 4; ++i) {
                v[i] = (gf_t)(c % q);
                c /= q;
            }
            t.points.push_back(v);
        }
    }
    std::sort(t.points.begin(), t.points.end());
    t.planes = t.points;

    t.point_by_pack_.assign(1 << 16, -1);
    for (int32_t i = 0; i < (int32_t)t.points.size(); ++i)
        t.point_by_pack_[pack_point(t.points[i])] = i;

    // Lines: direct RREF enumeration by pivot-column pattern.
    for (int c0 = 0; c0 < 4; ++c0) {
        for (int c1 = c0 + 1; c1 < 4; ++c1) {
            std::vector<int> free0, free1; // free columns of each row
            for (int j = c0 + 1; j < 4; ++j)
                if (j != c1) free0.push_back(j);
            for (int j = c1 + 1; j < 4; ++j) free1.push_back(j);
            int total = 1;
            for (size_t i = 0; i < free0.size() + free1.size(); ++i) total *= q;
            for (int combo = 0; combo < total; ++combo) {
                Mat2x4 m{};
                m[0][c0] = 1;
                m[1][c1] = 1;
                int c = combo;
                for (int j : free0) { m[0][j] = (gf_t)(c % q); c /= q; }
                for (int j : free1) { m[1][j] = (gf_t)(c % q); c /= q; }
                t.lines.push_back(m);
            }
        }
    }
    std::sort(t.lines.begin(), t.lines.end(),
              [](const Mat2x4& a, const Mat2x4& b) { return pack_line(a) < pack_line(b); });
    t.line_packs_.resize(t.lines.size());
    for (size_t i = 0; i < t.lines.size(); ++i) t.line_packs_[i] = pack_line(t.lines[i]);

    const int n_lines = (int)t.lines.size();
    const int n_points = (int)t.points.size();

    // Per-line incidences.
    t.line_points.resize(n_lines);
    t.line_planes.resize(n_lines);
    t.point_lines.resize(n_points);
    t.plane_lines.resize(n_points);
    for (int32_t l = 0; l < n_lines; ++l) {
        const Mat2x4& m = t.lines[l];
        auto& pts = t.line_points[l];
        pts.push_back(t.point_id(m[0]));
        for (int lam = 0; lam < q; ++lam)
            pts.push_back(t.point_id(add4(scale4(f, (gf_t)lam, m[0]), m[1])));
        std::sort(pts.begin(), pts.end());
        for (int32_t p : pts) t.point_lines[p].push_back(l);

        std::vector<Vec4> rows{m[0], m[1]};
        auto ns = nullspace4(f, rows);
        if (ns.size() != 2) throw std::logic_error("build_tables: line nullspace rank");
        auto& pls = t.line_planes[l];
        pls.push_back(t.plane_id(ns[0]));
        for (int lam = 0; lam < q; ++lam)
            pls.push_back(t.plane_id(add4(scale4(f, (gf_t)lam, ns[0]), ns[1])));
        std::sort(pls.begin(), pls.end());
        for (int32_t pl : pls) t.plane_lines[pl].push_back(l);
    }

    // point_planes via dot products.
    t.point_planes.resize(n_points);
    for (int32_t p = 0; p < n_points; ++p) {
        auto& pp = t.point_planes[p];
        for (int32_t pl = 0; pl < n_points; ++pl)
            if (dot4(f, t.points[p], t.planes[pl]) == 0) pp.push_back(pl);
    }

    // Pencil table, eager for small q.
    if (q <= 4) {
        const int per_point = q * q + q + 1;
        t.pencils.reserve((size_t)n_points * per_point);
        for (int32_t p = 0; p < n_points; ++p)
            for (int32_t pl : t.point_planes[p]) t.pencils.push_back({p, pl});
        t.pencil_lines_tab.resize(t.pencils.size());
        t.line_pencils.resize(n_lines);
        for (int32_t l = 0; l < n_lines; ++l) {
            for (int32_t p : t.line_points[l])
                for (int32_t pl : t.line_planes[l]) {
                    int32_t idx = t.pencil_index(p, pl);
                    t.pencil_lines_tab[idx].push_back(l);
                    t.line_pencils[l].push_back(idx);
                }
        }
        for (auto& v : t.pencil_lines_tab) std::sort(v.begin(), v.end());
        for (auto& v : t.line_pencils) std::sort(v.begin(), v.end());
    }

    return t;
}

} // namespace lgh
