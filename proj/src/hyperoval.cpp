#include "lgh/hyperoval.hpp"

#include <algorithm>
#include <stdexcept>

#include "lgh/bitvec.hpp"

namespace lgh {

namespace {

// Pencil hit counts for the whole flag table, indexed by pencil_index.
std::vector<int> pencil_counts(const GeometryTables& t, const LineSet& set) {
    int per_point = t.q * t.q + t.q + 1;
    std::vector<int> counts((size_t)t.n_points() * per_point, 0);
    for (int32_t l : set.lines)
        for (int32_t p : t.line_points[l])
            for (int32_t pl : t.line_planes[l]) ++counts[t.pencil_index(p, pl)];
    return counts;
}

} // namespace

LineSet make_line_set(const GeometryTables& t, std::vector<int32_t> lines) {
    std::sort(lines.begin(), lines.end());
    lines.erase(std::unique(lines.begin(), lines.end()), lines.end());
    for (int32_t l : lines)
        if (l < 0 || l >= t.n_lines())
            throw std::invalid_argument("make_line_set: line index out of range");
    return LineSet{t.q, std::move(lines)};
}

std::optional<Violation> verify_hyperoval(const GeometryTables& t, const LineSet& set) {
    auto counts = pencil_counts(t, set);
    int per_point = t.q * t.q + t.q + 1;
    for (int32_t p = 0; p < t.n_points(); ++p)
        for (int r = 0; r < per_point; ++r) {
            int c = counts[(size_t)p * per_point + r];
            if (c == 0 || c == 2) continue;
            Pencil pc{p, t.point_planes[p][r]};
            Violation v{pc, {}};
            for (int32_t l : pencil_lines(t, pc))
                if (std::binary_search(set.lines.begin(), set.lines.end(), l))
                    v.hits.push_back(l);
            return v;
        }
    return std::nullopt;
}

DegreeCensus degree_census(const GeometryTables& t, const LineSet& set) {
    DegreeCensus c;
    c.point_degree.assign(t.n_points(), 0);
    c.plane_degree.assign(t.n_planes(), 0);
    for (int32_t l : set.lines) {
        for (int32_t p : t.line_points[l]) ++c.point_degree[p];
        for (int32_t pl : t.line_planes[l]) ++c.plane_degree[pl];
    }
    return c;
}

bool dual_hyperoval_check(const GeometryTables& t, int32_t plane,
                          const std::vector<int32_t>& six) {
    std::vector<int32_t> sorted = six;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
        throw std::invalid_argument("dual_hyperoval_check: repeated line");
    for (int32_t l : six)
        if (!t.line_in_plane(l, plane))
            throw std::invalid_argument("dual_hyperoval_check: line not in the plane");
    std::vector<int> through(t.n_points(), 0);
    for (int32_t l : six)
        for (int32_t p : t.line_points[l]) ++through[p];
    for (int p = 0; p < t.n_points(); ++p)
        if (through[p] != 0 && through[p] != 2) return false;
    return true;
}

Prop3Result prop3_check(const GeometryTables& t, const LineSet& set, int32_t line,
                        const HyperbolicExternals& he) {
    if (!std::binary_search(set.lines.begin(), set.lines.end(), line))
        throw std::invalid_argument("prop3_check: line is not in the set");
    if (verify_hyperoval(t, set))
        throw std::invalid_argument("prop3_check: set is not a hyperoval");

    // Closed neighborhood of the line inside the set, and the mask of all
    // lines equal to or meeting it.
    BitVec perp(t.n_lines());
    perp.set(line);
    for (int32_t m = 0; m < t.n_lines(); ++m)
        if (m != line && meet_id(t, line, m)) perp.set(m);
    BitVec closed(t.n_lines());
    for (int32_t m : set.lines)
        if (perp.test(m)) closed.set(m);

    Prop3Result r;
    for (size_t i = 0; i < he.forms.size(); ++i) {
        if ((he.external[i] & perp) == closed) {
            r.found = true;
            r.witness = he.forms[i];
            r.scan_index = (int64_t)i;
            return r;
        }
    }
    return r;
}

SkewGeometry skew_geometry(int q, bool allow_long) {
    if (q != 4 && q != 8 && q != 16)
        throw std::invalid_argument("skew_geometry: q must be 4, 8 or 16");
    if (q == 16 && !allow_long)
        throw std::invalid_argument("skew_geometry: q=16 requires the long-running flag");
    GeometryTables t = build_tables(q);
    SkewGeometry g;
    g.set = make_line_set(t, external_lines(t, standard_hyperbolic()));
    auto counts = pencil_counts(t, g.set);
    for (int c : counts) ++g.histogram[c];
    return g;
}

} // namespace lgh
