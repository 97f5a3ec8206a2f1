#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <set>

#include "lgh/quadric.hpp"

using namespace lgh;

namespace {

bool is_hyperbolic(const QuadricClass& c) { return c.tag == QuadricType::hyperbolic; }
bool is_elliptic(const QuadricClass& c) { return c.tag == QuadricType::elliptic; }
bool never(const QuadricClass&) { return false; }

} // namespace

TEST_CASE("evaluate on the standard hyperbolic form") {
    GF f(2);
    QForm h = standard_hyperbolic();
    CHECK(evaluate(f, h, {1, 0, 0, 0}) == 0);
    CHECK(evaluate(f, h, {1, 1, 1, 1}) == 0); // 1 + 1 in characteristic 2
    CHECK(evaluate(f, h, {1, 1, 0, 0}) == 1);
    // projective well-definedness: Q(cx) = c^2 Q(x)
    for (gf_t c = 1; c < 4; ++c) {
        Vec4 p{1, 1, 0, 3};
        gf_t direct = evaluate(f, h, scale4(f, c, p));
        CHECK(direct == f.mul(f.mul(c, c), evaluate(f, h, p)));
    }
}

TEST_CASE("classification separates the three quadric types at q=4") {
    GeometryTables t = build_tables(4);
    QuadricClass h = classify(t, standard_hyperbolic());
    CHECK(h.tag == QuadricType::hyperbolic);
    CHECK(h.zero_count == 25);
    CHECK(h.bilinear_rank == 4);

    QuadricClass e = classify(t, elliptic_example());
    CHECK(e.tag == QuadricType::elliptic);
    CHECK(e.zero_count == 17);

    QForm d; // x0 x1 alone: a pair of planes
    d.coeffs[qform_coeff_index(0, 1)] = 1;
    CHECK(classify(t, d).tag == QuadricType::degenerate);
    CHECK(classify(t, d).bilinear_rank == 2);
}

TEST_CASE("line census of the standard hyperbolic quadric at q=4") {
    GeometryTables t = build_tables(4);
    BitVec zeros = zero_set(t, standard_hyperbolic());
    CHECK(zeros.count() == 25);
    LineCensus c = line_census(t, zeros);
    CHECK(c.contained == 10);
    CHECK(c.tangent == 75);
    CHECK(c.secant == 200);
    CHECK(c.external == 72);
    CHECK(c.total() == t.n_lines());
}

TEST_CASE("census sums to the line total for sampled forms") {
    GeometryTables t = build_tables(4);
    std::mt19937 rng(2026);
    std::uniform_int_distribution<int64_t> d(0, n_form_classes(4) - 1);
    for (int trial = 0; trial < 40; ++trial) {
        QForm f = form_by_index(4, d(rng));
        if (classify(t, f).tag == QuadricType::degenerate) continue;
        CHECK(line_census(t, zero_set(t, f)).total() == t.n_lines());
    }
}

TEST_CASE("scalar multiples give the same zero set and line classification") {
    GeometryTables t = build_tables(4);
    std::mt19937 rng(5);
    std::uniform_int_distribution<int64_t> d(0, n_form_classes(4) - 1);
    for (int trial = 0; trial < 20; ++trial) {
        QForm f = form_by_index(4, d(rng));
        BitVec z = zero_set(t, f);
        for (gf_t c = 2; c < 4; ++c) {
            QForm g = f;
            for (auto& x : g.coeffs) x = t.field.mul(c, x);
            CHECK(zero_set(t, g) == z);
            for (int l = 0; l < t.n_lines(); l += 31)
                CHECK(classify_line(t, zero_set(t, g), l) == classify_line(t, z, l));
        }
    }
}

TEST_CASE("reguli form the 5x5 grid structure") {
    GeometryTables t = build_tables(4);
    QForm h = standard_hyperbolic();
    auto fam = reguli(t, h);
    CHECK(fam[0].size() == 5);
    CHECK(fam[1].size() == 5);
    CHECK(fam[0][0] < fam[1][0]); // family of the smallest contained line first
    BitVec zeros = zero_set(t, h);
    for (const auto& f : fam) {
        // pairwise skew within a family, and the family covers all 25 points
        std::set<int32_t> covered;
        for (size_t i = 0; i < f.size(); ++i) {
            for (int32_t p : t.line_points[f[i]]) {
                CHECK(zeros.test(p));
                covered.insert(p);
            }
            for (size_t j = i + 1; j < f.size(); ++j)
                CHECK_FALSE(meet_id(t, f[i], f[j]).has_value());
        }
        CHECK(covered.size() == 25);
    }
    for (int32_t a : fam[0])
        for (int32_t b : fam[1]) CHECK(meet_id(t, a, b).has_value());
    CHECK_THROWS_AS(reguli(t, elliptic_example()), std::invalid_argument);
}

TEST_CASE("collineations fixing the quadric preserve or swap the reguli") {
    GeometryTables t = build_tables(4);
    QForm h = standard_hyperbolic();
    auto fam = reguli(t, h);
    BitVec zeros = zero_set(t, h);
    // Maps fixing x0x1 + x2x3: swap the first pair, swap the two pairs,
    // and diag(c, 1/c, 1, 1).
    std::vector<Mat4> maps;
    Mat4 m = mat_identity();
    std::swap(m[0], m[1]);
    maps.push_back(m);
    m = mat_identity();
    std::swap(m[0], m[2]);
    std::swap(m[1], m[3]);
    maps.push_back(m);
    m = mat_identity();
    m[0][0] = 2;
    m[1][1] = t.field.inv(2);
    maps.push_back(m);
    for (const auto& g : maps) {
        // image of the zero set is the zero set
        BitVec img(t.n_points());
        for (std::size_t p = zeros.find_next(0); p < zeros.size(); p = zeros.find_next(p + 1))
            img.set(t.point_id(apply_row(t.field, t.points[p], g)));
        REQUIRE(img == zeros);
        auto map_family = [&](const std::vector<int32_t>& f) {
            std::set<int32_t> out;
            for (int32_t l : f)
                out.insert(t.line_id_from_span(apply_row(t.field, t.lines[l][0], g),
                                               apply_row(t.field, t.lines[l][1], g)));
            return out;
        };
        std::set<int32_t> a(fam[0].begin(), fam[0].end());
        std::set<int32_t> b(fam[1].begin(), fam[1].end());
        std::set<int32_t> ia = map_family(fam[0]), ib = map_family(fam[1]);
        CHECK(((ia == a && ib == b) || (ia == b && ib == a)));
    }
}

TEST_CASE("plane sections are conics or line pairs with the right census") {
    GeometryTables t = build_tables(4);
    BitVec zeros = zero_set(t, standard_hyperbolic());
    PlaneCensus c = plane_census(t, zeros);
    CHECK(c.line_pair_planes == 25);
    CHECK(c.conic_planes == 60);
    // a 9-point section is exactly the union of the two contained lines in it
    std::vector<int32_t> contained;
    for (int l = 0; l < t.n_lines(); ++l)
        if (classify_line(t, zeros, l) == LineClass::contained) contained.push_back(l);
    for (int pl = 0; pl < t.n_planes(); ++pl) {
        if (plane_section_size(t, zeros, pl) != 9) continue;
        std::set<int32_t> section_pts;
        for (int32_t l : contained)
            if (t.line_in_plane(l, pl))
                section_pts.insert(t.line_points[l].begin(), t.line_points[l].end());
        CHECK(section_pts.size() == 9);
        for (int32_t p : section_pts) CHECK(t.point_on_plane(p, pl));
    }
}

TEST_CASE("external lines form the 72-line set with its 6-fold regularities") {
    GeometryTables t = build_tables(4);
    QForm h = standard_hyperbolic();
    auto ext = external_lines(t, h);
    CHECK(ext.size() == 72);
    CHECK(std::is_sorted(ext.begin(), ext.end()));
    BitVec zeros = zero_set(t, h);
    // every point off the quadric lies on exactly 6 external lines
    std::vector<int> per_point(t.n_points(), 0);
    for (int32_t l : ext)
        for (int32_t p : t.line_points[l]) ++per_point[p];
    for (int p = 0; p < t.n_points(); ++p)
        CHECK(per_point[p] == (zeros.test(p) ? 0 : 6));
    // every conic plane contains exactly 6, every line-pair plane none
    std::vector<int> per_plane(t.n_planes(), 0);
    for (int32_t l : ext)
        for (int32_t pl : t.line_planes[l]) ++per_plane[pl];
    for (int pl = 0; pl < t.n_planes(); ++pl) {
        int section = plane_section_size(t, zeros, pl);
        CHECK(per_plane[pl] == (section == 5 ? 6 : 0));
    }
}

TEST_CASE("form class enumeration is a bijection with normalized representatives") {
    CHECK(n_form_classes(4) == 349525);
    std::set<QForm> seen;
    for (int64_t i : {int64_t(0), int64_t(1), int64_t(261), int64_t(262143),
                      int64_t(262144), int64_t(349524)}) {
        QForm f = form_by_index(4, i);
        int first = 0;
        while (first < 10 && f.coeffs[first] == 0) ++first;
        REQUIRE(first < 10);
        CHECK(f.coeffs[first] == 1);
        seen.insert(f);
    }
    CHECK(seen.size() == 6);
    CHECK_THROWS_AS(form_by_index(4, n_form_classes(4)), std::out_of_range);
}

TEST_CASE("scan_forms counts match the orbit-stabilizer predictions") {
    GeometryTables t = build_tables(4);
    auto hyper = scan_forms(t, is_hyperbolic);
    // |PGL_4(4)| / |PGO+_4(4)| = 987033600 / 7200
    CHECK((int64_t)hyper.size() == 987033600LL / 7200);
    CHECK((int64_t)hyper.size() == 137088);
    auto ell = scan_forms(t, is_elliptic);
    // |PGL_4(4)| / |PGO-_4(4)| = 987033600 / 8160
    CHECK((int64_t)ell.size() == 987033600LL / 8160);
    CHECK((int64_t)ell.size() == 120960);
    CHECK(scan_forms(t, never).empty());
    // determinism across thread counts: chunk order fixes the output order
    auto hyper2 = scan_forms(t, is_hyperbolic, 3);
    CHECK(hyper == hyper2);
    // the standard form is one of the representatives found
    CHECK(std::find(hyper.begin(), hyper.end(), standard_hyperbolic()) != hyper.end());
}

TEST_CASE("hyperbolic external sets cover every hyperbolic class with 72 lines each") {
    GeometryTables t = build_tables(4);
    auto he = hyperbolic_external_sets(t);
    CHECK(he.forms.size() == 137088);
    CHECK(he.external.size() == he.forms.size());
    for (size_t i = 0; i < he.external.size(); i += 4096) CHECK(he.external[i].count() == 72);
    // consistency with the direct computation on the standard form
    auto it = std::find(he.forms.begin(), he.forms.end(), standard_hyperbolic());
    REQUIRE(it != he.forms.end());
    const BitVec& ext = he.external[it - he.forms.begin()];
    for (int32_t l : external_lines(t, standard_hyperbolic())) CHECK(ext.test(l));
    CHECK(ext.count() == 72);
}

TEST_CASE("q=8 geometry of the standard hyperbolic quadric") {
    GeometryTables t = build_tables(8);
    QuadricClass c = classify(t, standard_hyperbolic());
    CHECK(c.tag == QuadricType::hyperbolic);
    CHECK(c.zero_count == 81);
    BitVec zeros = zero_set(t, standard_hyperbolic());
    LineCensus lc = line_census(t, zeros);
    CHECK(lc.contained == 18);
    CHECK(lc.tangent == 567);
    CHECK(lc.secant == 2592);
    CHECK(lc.external == 1568);
    CHECK(lc.total() == 4745);
    PlaneCensus pc = plane_census(t, zeros);
    CHECK(pc.line_pair_planes == 81);
    CHECK(pc.conic_planes == 504);
    auto fam = reguli(t, standard_hyperbolic());
    CHECK(fam[0].size() == 9);
    CHECK(fam[1].size() == 9);
}
