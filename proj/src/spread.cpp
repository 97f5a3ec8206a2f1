#include "lgh/spread.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace lgh {

namespace {

const GF& f16() {
    static GF f(4);
    return f;
}

// x = emb(a) + emb(b) * zeta with a, b in GF(4); returns (a, b).
std::array<gf_t, 2> decompose16(gf_t x) {
    static const auto table = [] {
        std::array<std::array<gf_t, 2>, 16> tab{};
        for (gf_t a = 0; a < 4; ++a)
            for (gf_t b = 0; b < 4; ++b) {
                gf_t v = (gf_t)(embed_gf4_gf16(a) ^ f16().mul(embed_gf4_gf16(b), 2));
                tab[v] = {a, b};
            }
        return tab;
    }();
    return table[x];
}

// (x, y) in GF(16)^2 as a GF(4)^4 row.
Vec4 vec_of16(gf_t x, gf_t y) {
    auto dx = decompose16(x), dy = decompose16(y);
    return {dx[0], dx[1], dy[0], dy[1]};
}

uint64_t pack_mat4(const Mat4& m) {
    uint64_t r = 0;
    for (const auto& row : m)
        for (gf_t x : row) r = (r << 4) | x;
    return r;
}

} // namespace

Mat4 blowup(const Mat2x2& m) {
    const GF& f = f16();
    gf_t det = (gf_t)(f.mul(m[0][0], m[1][1]) ^ f.mul(m[0][1], m[1][0]));
    if (det == 0) throw std::invalid_argument("blowup: singular matrix over GF(16)");
    // Row i is the GF(4) decomposition of the image of the i-th basis vector
    // (1,0), (zeta,0), (0,1), (0,zeta) under the right action (x,y) -> (x,y)m.
    Mat4 out;
    const std::array<std::array<gf_t, 2>, 4> basis{{{1, 0}, {2, 0}, {0, 1}, {0, 2}}};
    for (int i = 0; i < 4; ++i) {
        gf_t x = basis[i][0], y = basis[i][1];
        gf_t ix = (gf_t)(f.mul(x, m[0][0]) ^ f.mul(y, m[1][0]));
        gf_t iy = (gf_t)(f.mul(x, m[0][1]) ^ f.mul(y, m[1][1]));
        out[i] = vec_of16(ix, iy);
    }
    GF f4(2);
    return mat_normalize(f4, out);
}

std::vector<Mat4> spread_group_generators() {
    gf_t z3 = f16().pow(2, 3);
    return {blowup({{{z3, 0}, {0, 1}}}), blowup({{{1, 0}, {0, z3}}}),
            blowup({{{1, 0}, {1, 1}}})};
}

SpreadModel build_spread(const GeometryTables& t) {
    if (t.q != 4) throw std::invalid_argument("build_spread: requires q = 4");
    SpreadModel sp;
    const GF& f = f16();
    // Points of PG(1,16): (1 : c) for all c, and (0 : 1). The spread line of
    // (x : y) is the GF(16)-span, a 2-dimensional GF(4)-space with basis
    // {(x,y), (zeta x, zeta y)}.
    auto spread_line = [&](gf_t x, gf_t y) {
        Vec4 r0 = vec_of16(x, y);
        Vec4 r1 = vec_of16(f.mul(2, x), f.mul(2, y));
        return t.line_id_from_span(r0, r1);
    };
    sp.s = spread_line(1, 0);
    sp.lines.push_back(sp.s);
    for (int c = 0; c < 16; ++c) sp.lines.push_back(spread_line(1, (gf_t)c));
    sp.lines.push_back(spread_line(0, 1));
    std::sort(sp.lines.begin(), sp.lines.end());
    sp.lines.erase(std::unique(sp.lines.begin(), sp.lines.end()), sp.lines.end());
    if (sp.lines.size() != 17) throw std::logic_error("build_spread: expected 17 lines");
    return sp;
}

LinePartition partition_lines(const GeometryTables& t, const SpreadModel& sp) {
    LinePartition p;
    for (int32_t l : sp.lines)
        if (l != sp.s) p.S.push_back(l);
    for (int32_t l = 0; l < t.n_lines(); ++l) {
        if (l == sp.s || meet_id(t, l, sp.s)) {
            p.s_perp.push_back(l);
        } else if (!std::binary_search(p.S.begin(), p.S.end(), l)) {
            p.A.push_back(l);
        }
    }
    return p;
}

std::vector<int32_t> line_perm(const GeometryTables& t, const Mat4& m) {
    std::vector<int32_t> perm(t.n_lines());
    for (int32_t l = 0; l < t.n_lines(); ++l)
        perm[l] = t.line_id_from_span(apply_row(t.field, t.lines[l][0], m),
                                      apply_row(t.field, t.lines[l][1], m));
    return perm;
}

std::vector<int32_t> point_perm(const GeometryTables& t, const Mat4& m) {
    std::vector<int32_t> perm(t.n_points());
    for (int32_t p = 0; p < t.n_points(); ++p)
        perm[p] = t.point_id(apply_row(t.field, t.points[p], m));
    return perm;
}

std::vector<int32_t> plane_perm(const GeometryTables& t, const Mat4& m) {
    auto inv = mat_inverse(t.field, m);
    if (!inv) throw std::invalid_argument("plane_perm: singular map");
    Mat4 it = mat_transpose(*inv);
    std::vector<int32_t> perm(t.n_planes());
    for (int32_t pl = 0; pl < t.n_planes(); ++pl)
        perm[pl] = t.plane_id(apply_row(t.field, t.planes[pl], it));
    return perm;
}

GroupAction generate_group(const GeometryTables& t, const std::vector<Mat4>& gens,
                           size_t cap) {
    GroupAction g;
    for (const Mat4& m : gens) {
        if (!mat_inverse(t.field, m))
            throw std::invalid_argument("generate_group: singular generator");
        g.generators.push_back(mat_normalize(t.field, m));
    }
    std::map<uint64_t, size_t> seen;
    g.elements.push_back(mat_normalize(t.field, mat_identity()));
    seen[pack_mat4(g.elements[0])] = 0;
    for (size_t i = 0; i < g.elements.size(); ++i) {
        if (g.elements.size() > cap)
            throw std::runtime_error("generate_group: closure exceeded cap");
        for (const Mat4& gen : g.generators) {
            Mat4 prod = mat_normalize(t.field, mat_mul(t.field, g.elements[i], gen));
            uint64_t key = pack_mat4(prod);
            if (seen.emplace(key, g.elements.size()).second) g.elements.push_back(prod);
        }
    }
    g.line_perms.reserve(g.elements.size());
    for (const Mat4& m : g.elements) g.line_perms.push_back(line_perm(t, m));
    return g;
}

std::vector<std::vector<int32_t>> orbits(const GroupAction& g,
                                         const std::vector<int32_t>& domain) {
    std::vector<std::vector<int32_t>> out;
    std::vector<int32_t> sorted = domain;
    std::sort(sorted.begin(), sorted.end());
    std::vector<bool> done(g.line_perms.empty() ? 0 : g.line_perms[0].size(), false);
    for (int32_t seed : sorted) {
        if (done[seed]) continue;
        std::vector<int32_t> orbit;
        for (const auto& perm : g.line_perms) {
            int32_t img = perm[seed];
            if (!std::binary_search(sorted.begin(), sorted.end(), img))
                throw std::invalid_argument("orbits: line " + std::to_string(img) +
                                            " escapes the domain");
            if (!done[img]) {
                done[img] = true;
                orbit.push_back(img);
            }
        }
        std::sort(orbit.begin(), orbit.end());
        out.push_back(std::move(orbit));
    }
    return out;
}

std::vector<int32_t> build_96(const GeometryTables& t, const SpreadModel& sp,
                              int orbit_index) {
    if (orbit_index < 1 || orbit_index > 3)
        throw std::invalid_argument("build_96: orbit index must be 1, 2 or 3");
    LinePartition part = partition_lines(t, sp);
    GroupAction g = generate_group(t, spread_group_generators());
    auto orbs = orbits(g, part.A);
    if (orbs.size() != 3) throw std::logic_error("build_96: expected 3 orbits on A");
    std::vector<int32_t> out = part.S;
    const auto& a = orbs[orbit_index - 1];
    out.insert(out.end(), a.begin(), a.end());
    std::sort(out.begin(), out.end());
    return out;
}

int32_t duality(const GeometryTables& t, int32_t line) {
    auto ns = nullspace4(t.field, {t.lines[line][0], t.lines[line][1]});
    if (ns.size() != 2) throw std::logic_error("duality: expected a 2-dimensional annihilator");
    return t.line_id_from_span(ns[0], ns[1]);
}

int32_t frobenius_line(const GeometryTables& t, int32_t line) {
    Vec4 a = t.lines[line][0], b = t.lines[line][1];
    for (auto& x : a) x = t.field.frobenius(x);
    for (auto& x : b) x = t.field.frobenius(x);
    return t.line_id_from_span(a, b);
}

} // namespace lgh
