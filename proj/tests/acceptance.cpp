// Acceptance battery: thirteen checks with pinned expected values and wall
// clock budgets, one pass/fail line each. The first twelve run twice, with
// thread hints 1 and 3, and the thirteenth demands byte-identical JSON
// outputs from both passes. Exits nonzero when any check fails.
#include "lgh/graph.hpp"
#include "lgh/hyperoval.hpp"
#include "lgh/io.hpp"
#include "lgh/pg.hpp"
#include "lgh/quadric.hpp"
#include "lgh/search.hpp"
#include "lgh/spread.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <set>
#include <string>
#include <vector>

#include <json.hpp>

using namespace lgh;
using nlohmann::json;

namespace {

struct Outcome {
    bool ok = true;
    double seconds = 0;
    std::string detail; // key numbers, or the failure reason
    std::string output; // serialized JSON, compared across passes
};

struct Check {
    json doc = json::object();
    std::string fail; // first failure reason; empty = pass

    template <class T, class U>
    void equal(const std::string& key, const T& got, const U& expected) {
        doc[key] = got;
        if (fail.empty() && !(got == static_cast<T>(expected)))
            fail = key + "=" + json(got).dump() + " expected " + json(expected).dump();
    }
    void that(const std::string& key, bool cond) {
        doc[key] = cond;
        if (fail.empty() && !cond) fail = key + " is false";
    }
    Outcome outcome() const {
        Outcome o;
        o.ok = fail.empty();
        o.detail = fail;
        o.output = doc.dump(2);
        return o;
    }
};

// Everything expensive is computed once per pass and shared between checks.
struct Ctx {
    int threads;
    GeometryTables t;
    LineSet set72;
    SpreadModel sp;
    LinePartition part;
    GroupAction group;
    std::vector<std::vector<int32_t>> orbit; // on A, three of size 80
    LineSet set96[3];

    explicit Ctx(int th) : threads(th), t(build_tables(4)) {
        set72 = make_line_set(t, external_lines(t, standard_hyperbolic()));
        sp = build_spread(t);
        part = partition_lines(t, sp);
        group = generate_group(t, spread_group_generators());
        orbit = orbits(group, part.A);
        for (int i = 0; i < 3; ++i) set96[i] = make_line_set(t, build_96(t, sp, i + 1));
    }
};

Outcome c1_counts(const Ctx& c) {
    Check k;
    const GeometryTables& t = c.t;
    k.equal("points", t.n_points(), 85);
    k.equal("lines", t.n_lines(), 357);
    k.equal("planes", t.n_planes(), 85);
    k.equal("pencils", t.pencils.size(), 1785);
    bool five = true, twenty_five = true;
    for (const auto& v : t.pencil_lines_tab) five = five && v.size() == 5;
    for (const auto& v : t.line_pencils) twenty_five = twenty_five && v.size() == 25;
    k.that("five_lines_per_pencil", five);
    k.that("twenty_five_pencils_per_line", twenty_five);
    return k.outcome();
}

Outcome c2_quadric_census(const Ctx& c) {
    Check k;
    const GeometryTables& t = c.t;
    QForm h = standard_hyperbolic();
    BitVec zeros = zero_set(t, h);
    k.equal("points", (int)zeros.count(), 25);

    LineCensus lc = line_census(t, zeros);
    k.equal("contained_lines", lc.contained, 10);
    k.equal("external_lines", lc.external, 72);

    auto reg = reguli(t, h);
    k.equal("regulus_sizes", json::array({reg[0].size(), reg[1].size()}),
            json::array({5, 5}));
    bool skew_ok = true;
    BitVec covered(t.n_points());
    for (const auto& family : reg)
        for (size_t i = 0; i < family.size(); ++i) {
            for (int32_t p : t.line_points[family[i]]) covered.set(p);
            for (size_t j = i + 1; j < family.size(); ++j)
                skew_ok = skew_ok && !meet_id(t, family[i], family[j]).has_value();
        }
    k.that("reguli_pairwise_skew", skew_ok);
    k.that("reguli_cover_quadric", covered == zeros);

    PlaneCensus pc = plane_census(t, zeros);
    k.equal("line_pair_planes", pc.line_pair_planes, 25);
    k.equal("conic_planes", pc.conic_planes, 60);

    // 6 external lines in every conic plane, 6 through every off-quadric point
    BitVec ext(t.n_lines());
    for (int32_t l : c.set72.lines) ext.set(l);
    int bad_planes = 0, bad_points = 0;
    for (int32_t pl = 0; pl < t.n_planes(); ++pl) {
        if (plane_section_size(t, zeros, pl) != 5) continue;
        int n = 0;
        for (int32_t l : t.plane_lines[pl]) n += ext.test(l);
        if (n != 6) ++bad_planes;
    }
    for (int32_t p = 0; p < t.n_points(); ++p) {
        if (zeros.test(p)) continue;
        int n = 0;
        for (int32_t l : t.point_lines[p]) n += ext.test(l);
        if (n != 6) ++bad_points;
    }
    k.equal("conic_planes_without_6_externals", bad_planes, 0);
    k.equal("off_points_without_6_externals", bad_points, 0);
    return k.outcome();
}

Outcome c3_prop1(const Ctx& c) {
    Check k;
    k.equal("size", c.set72.lines.size(), 72);
    k.that("hyperoval", !verify_hyperoval(c.t, c.set72).has_value());
    return k.outcome();
}

Outcome c4_spread_pipeline(const Ctx& c) {
    Check k;
    const GeometryTables& t = c.t;
    k.equal("spread_lines", c.sp.lines.size(), 17);

    std::vector<int> cover(t.n_points(), 0);
    for (int32_t l : c.sp.lines)
        for (int32_t p : t.line_points[l]) ++cover[p];
    k.that("each_point_on_one_spread_line",
           std::all_of(cover.begin(), cover.end(), [](int n) { return n == 1; }));

    int bad_planes = 0;
    for (int32_t pl = 0; pl < t.n_planes(); ++pl) {
        int n = 0;
        for (int32_t l : c.sp.lines) n += t.line_in_plane(l, pl);
        if (n != 1) ++bad_planes;
    }
    k.equal("planes_without_unique_spread_line", bad_planes, 0);

    k.equal("partition_sizes",
            json::array({c.part.S.size(), c.part.s_perp.size(), c.part.A.size()}),
            json::array({16, 101, 240}));
    k.equal("group_order", c.group.order(), 400);
    json sizes = json::array();
    for (const auto& o : c.orbit) sizes.push_back(o.size());
    k.equal("orbit_sizes_on_A", sizes, json::array({80, 80, 80}));
    return k.outcome();
}

Outcome c5_prop2(const Ctx& c) {
    Check k;
    for (int i = 0; i < 3; ++i) {
        std::string key = "orbit" + std::to_string(i + 1);
        auto start = std::chrono::steady_clock::now();
        k.equal(key + "_size", c.set96[i].lines.size(), 96);
        k.that(key + "_hyperoval", !verify_hyperoval(c.t, c.set96[i]).has_value());
        double sec = std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
                         .count();
        k.that(key + "_under_1s", sec < 1.0);
    }
    return k.outcome();
}

Outcome c6_dual_hyperoval(const Ctx& c) {
    Check k;
    const GeometryTables& t = c.t;
    const std::vector<int32_t>& a1 = c.orbit[0];
    BitVec in_a1(t.n_lines());
    for (int32_t l : a1) in_a1.set(l);

    // plane perms once per group element, reused for all 80 stabilizer counts
    std::vector<std::vector<int32_t>> pperms;
    pperms.reserve(c.group.elements.size());
    for (const Mat4& m : c.group.elements) pperms.push_back(plane_perm(t, m));

    int planes_checked = 0, dual_ok = 0, stab5 = 0;
    for (int32_t pl = 0; pl < t.n_planes(); ++pl) {
        if (t.line_in_plane(c.sp.s, pl)) continue;
        ++planes_checked;

        int32_t spread_line = -1;
        for (int32_t l : c.sp.lines)
            if (t.line_in_plane(l, pl)) spread_line = l;
        std::vector<int32_t> six{spread_line};
        for (int32_t l : t.plane_lines[pl])
            if (in_a1.test(l) && meet_id(t, l, spread_line)) six.push_back(l);
        if (six.size() == 6) {
            // the five A1 members hit the spread line in its five points
            std::set<int32_t> hits;
            for (size_t i = 1; i < six.size(); ++i) hits.insert(*meet_id(t, six[i], spread_line));
            if (hits.size() == 5 && dual_hyperoval_check(t, pl, six)) ++dual_ok;
        }

        int fixers = 0;
        for (const auto& pp : pperms) fixers += pp[pl] == pl;
        if (fixers == 5) ++stab5;
    }
    k.equal("planes_off_s", planes_checked, 80);
    k.equal("dual_hyperovals", dual_ok, 80);
    k.equal("stabilizers_of_order_5", stab5, 80);
    return k.outcome();
}

Outcome c7_local_grid(const Ctx& c) {
    Check k;
    static const std::vector<uint8_t> rook_form = canonical_form(rook_graph(5));
    const SRGParams grid{25, 8, 3, 2};
    for (int which = 0; which < 2; ++which) {
        const LineSet& set = which ? c.set96[0] : c.set72;
        std::string key = which ? "set96" : "set72";
        Graph g = collinearity_graph(c.t, set);
        bool regular = true;
        int local_rook = 0;
        for (int v = 0; v < g.n; ++v) {
            regular = regular && g.degree(v) == 25;
            Graph loc = local_graph(g, v);
            auto params = srg_check(loc);
            if (params && *params == grid && canonical_form(loc) == rook_form) ++local_rook;
        }
        k.that(key + "_25_regular", regular);
        k.equal(key + "_local_rook_count", local_rook, g.n);
    }
    return k.outcome();
}

Outcome c8_six_cliques(const Ctx& c) {
    Check k;
    SixCliqueCensus s72 = six_clique_census(c.t, collinearity_graph(c.t, c.set72));
    k.equal("set72_point_cliques", s72.point_cliques.size(), 60);
    k.equal("set72_plane_cliques", s72.plane_cliques.size(), 60);
    SixCliqueCensus s96 = six_clique_census(c.t, collinearity_graph(c.t, c.set96[0]));
    k.equal("set96_point_cliques", s96.point_cliques.size(), 80);
    k.equal("set96_plane_cliques", s96.plane_cliques.size(), 80);
    return k.outcome();
}

Outcome c9_aut_order(const Ctx& c) {
    Check k;
    AutomorphismGroup aut = automorphism_group(collinearity_graph(c.t, c.set96[0]));
    k.equal("aut_order_96", aut.order, 3200);
    return k.outcome();
}

Outcome c10_prop3(const Ctx& c) {
    Check k;
    HyperbolicExternals he = hyperbolic_external_sets(c.t, c.threads);
    k.equal("hyperbolic_form_classes", he.forms.size(), 137088);
    int witnessed = 0;
    int32_t first_unwitnessed = -1;
    for (int32_t l : c.set96[0].lines) {
        Prop3Result r = prop3_check(c.t, c.set96[0], l, he);
        if (r.found)
            ++witnessed;
        else if (first_unwitnessed < 0)
            first_unwitnessed = l;
    }
    k.equal("lines_witnessed", witnessed, 96);
    if (first_unwitnessed >= 0) k.doc["first_unwitnessed_line"] = first_unwitnessed;
    return k.outcome();
}

Outcome c11_generalize(const Ctx&) {
    Check k;
    SkewGeometry sg = skew_geometry(8);
    k.equal("lines", sg.set.lines.size(), 1568);
    json histogram = json::object();
    for (auto& [n, count] : sg.histogram) histogram[std::to_string(n)] = count;
    k.doc["histogram"] = histogram;
    k.that("support_is_0_and_4",
           sg.histogram.size() == 2 && sg.histogram.count(0) && sg.histogram.count(4) &&
               sg.histogram.at(0) > 0 && sg.histogram.at(4) > 0);
    return k.outcome();
}

Outcome c12_search(const Ctx& c) {
    Check k;
    SearchConfig cfg;
    cfg.node_budget = 10000000;
    cfg.threads = c.threads;

    cfg.seed = SeedMode::fix_first_line;
    cfg.min_size = 72;
    cfg.max_size = 72;
    SearchReport r72 = enumerate_hyperovals(c.t, cfg);
    int verified72 = 0;
    for (const LineSet& s : r72.found)
        if (s.lines.size() == 72 && !verify_hyperoval(c.t, s)) ++verified72;
    k.doc["seed72"] = json{{"found", r72.found.size()},
                           {"nodes", r72.nodes},
                           {"exhausted", r72.exhausted}};
    k.that("seed72_rediscovers", verified72 >= 1);
    k.equal("seed72_all_verified", verified72, (int)r72.found.size());

    cfg.seed = SeedMode::fix_first_pencil_pair;
    cfg.min_size = 96;
    cfg.max_size = 96;
    SearchReport r96 = enumerate_hyperovals(c.t, cfg);
    int verified96 = 0;
    for (const LineSet& s : r96.found)
        if (s.lines.size() == 96 && !verify_hyperoval(c.t, s)) ++verified96;
    k.doc["seed96"] = json{{"found", r96.found.size()},
                           {"nodes", r96.nodes},
                           {"exhausted", r96.exhausted}};
    k.that("seed96_recloses", verified96 >= 1);
    k.equal("seed96_all_verified", verified96, (int)r96.found.size());
    return k.outcome();
}

struct Criterion {
    const char* name;
    double budget_seconds;
    Outcome (*run)(const Ctx&);
};

const Criterion kCriteria[] = {
    {"geometry counts", 1, c1_counts},
    {"hyperbolic quadric census", 1, c2_quadric_census},
    {"72 external lines are a hyperoval", 1, c3_prop1},
    {"spread, partition, group, orbits", 5, c4_spread_pipeline},
    {"the three 96-line sets are hyperovals", 3, c5_prop2},
    {"dual hyperovals and plane stabilizers", 10, c6_dual_hyperoval},
    {"local 5x5 grid property", 30, c7_local_grid},
    {"six-clique census", 30, c8_six_cliques},
    {"automorphism group order 3200", 300, c9_aut_order},
    {"local quadric witness for all 96 lines", 1800, c10_prop3},
    {"q=8 skew geometry", 120, c11_generalize},
    {"seeded search rediscovery", 600, c12_search},
};

std::vector<Outcome> run_battery(int threads) {
    Ctx ctx(threads);
    std::vector<Outcome> results;
    for (const Criterion& cr : kCriteria) {
        Outcome o;
        auto start = std::chrono::steady_clock::now();
        try {
            o = cr.run(ctx);
        } catch (const std::exception& e) {
            o.ok = false;
            o.detail = std::string("exception: ") + e.what();
        }
        o.seconds =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        results.push_back(std::move(o));
    }
    return results;
}

} // namespace

int main() {
    std::vector<Outcome> pass1 = run_battery(1);
    std::vector<Outcome> pass3 = run_battery(3);

    int failures = 0;
    for (size_t i = 0; i < std::size(kCriteria); ++i) {
        Outcome& o = pass1[i];
        bool in_budget = o.seconds <= kCriteria[i].budget_seconds;
        bool ok = o.ok && in_budget;
        failures += !ok;
        std::printf("%s %2zu  %-42s %7.2fs / %gs%s%s\n", ok ? "pass" : "FAIL", i + 1,
                    kCriteria[i].name, o.seconds, kCriteria[i].budget_seconds,
                    o.detail.empty() ? "" : "  ", o.detail.c_str());
        if (o.ok && !in_budget) std::printf("        time budget exceeded\n");
    }

    bool identical = true;
    for (size_t i = 0; i < std::size(kCriteria); ++i)
        if (pass1[i].output != pass3[i].output) {
            identical = false;
            std::printf("        criterion %zu output differs between thread hints 1 and 3\n",
                        i + 1);
        }
    failures += !identical;
    std::printf("%s 13  %-42s %7s\n", identical ? "pass" : "FAIL",
                "byte-identical outputs across thread hints", "");

    if (failures) std::printf("%d criterion(s) failed\n", failures);
    return failures ? 1 : 0;
}
