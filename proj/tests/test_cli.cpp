#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "lgh/io.hpp"
#include "lgh/quadric.hpp"

#include <cstdio>
#include <cstdlib>
#include <string>
#include <sys/wait.h>

#include <json.hpp>

using namespace lgh;
using nlohmann::json;

namespace {

struct RunResult {
    int code = -1;
    std::string out;
};

// Runs the installed binary with stderr dropped; stdout is the contract.
RunResult run(const std::string& args, const std::string& env = "") {
    std::string cmd = env + (env.empty() ? "" : " ") + LGH_BIN + " " + args + " 2>/dev/null";
    FILE* p = popen(cmd.c_str(), "r");
    REQUIRE(p != nullptr);
    RunResult r;
    char buf[4096];
    size_t n;
    while ((n = fread(buf, 1, sizeof buf, p)) > 0) r.out.append(buf, n);
    int st = pclose(p);
    r.code = WIFEXITED(st) ? WEXITSTATUS(st) : -1;
    return r;
}

std::string temp_path(const std::string& name) { return "cli_test_" + name; }

const GeometryTables& tables() {
    static GeometryTables t = build_tables(4);
    return t;
}

} // namespace

TEST_CASE("stats") {
    RunResult r = run("stats --q 4");
    REQUIRE(r.code == 0);
    json doc = json::parse(r.out);
    CHECK(doc.at("points") == 85);
    CHECK(doc.at("lines") == 357);
    CHECK(doc.at("planes") == 85);
    CHECK(doc.at("pencils") == 1785);
    CHECK(doc.at("lines_per_pencil") == 5);
    CHECK(doc.at("pencils_per_line") == 25);
    CHECK(doc.at("fingerprint").at("table_hash") == tables().fingerprint_hex());
}

TEST_CASE("construct, export, re-import, verify round trip") {
    std::string f = temp_path("set72.json");
    RunResult c = run("construct quadric72 --out " + f);
    REQUIRE(c.code == 0);

    // file equals the in-memory pipeline's serialization
    LineSet direct = make_line_set(tables(), external_lines(tables(), standard_hyperbolic()));
    CHECK(read_text_file(f) == line_set_to_json(tables(), direct));

    RunResult v = run("verify --in " + f);
    CHECK(v.code == 0);
    json doc = json::parse(v.out);
    CHECK(doc.at("ok") == true);
    CHECK(doc.at("size") == 72);

    // construct to stdout is byte-identical across runs
    RunResult a = run("construct quadric72");
    RunResult b = run("construct quadric72");
    CHECK(a.out == b.out);
    CHECK(a.out == read_text_file(f));
    std::remove(f.c_str());
}

TEST_CASE("spread96 orbits verify and aut order is 3200") {
    for (int orbit : {1, 2, 3}) {
        std::string f = temp_path("set96_" + std::to_string(orbit) + ".json");
        REQUIRE(run("construct spread96 --orbit " + std::to_string(orbit) + " --out " + f).code == 0);
        CHECK(run("verify --in " + f).code == 0);
        if (orbit == 1) {
            RunResult a = run("aut --in " + f);
            REQUIRE(a.code == 0);
            json doc = json::parse(a.out);
            CHECK(doc.at("vertices") == 96);
            CHECK(doc.at("order") == 3200);
        }
        std::remove(f.c_str());
    }
}

TEST_CASE("verify rejects a singleton with a pencil witness") {
    std::string f = temp_path("one_line.json");
    write_text_file(f, line_set_to_json(tables(), make_line_set(tables(), {17})));
    RunResult r = run("verify --in " + f);
    CHECK(r.code == 1);
    json doc = json::parse(r.out);
    CHECK(doc.at("violation").at("hits") == json::array({17}));
    CHECK(doc.at("violation").at("pencil").contains("point"));

    // census and prop3 reject the same input the same way
    CHECK(run("census --in " + f).code == 1);
    CHECK(run("prop3 --in " + f).code == 1);
    std::remove(f.c_str());
}

TEST_CASE("census of the 72-set") {
    std::string f = temp_path("census72.json");
    REQUIRE(run("construct quadric72 --out " + f).code == 0);
    RunResult r = run("census --in " + f);
    REQUIRE(r.code == 0);
    json doc = json::parse(r.out);
    CHECK(doc.at("point_degrees") == json({{"0", 25}, {"6", 60}}));
    CHECK(doc.at("plane_degrees") == json({{"0", 25}, {"6", 60}}));
    CHECK(doc.at("six_cliques").at("point") == 60);
    CHECK(doc.at("six_cliques").at("plane") == 60);
    std::remove(f.c_str());
}

TEST_CASE("graph export formats") {
    std::string f = temp_path("graph72.json");
    REQUIRE(run("construct quadric72 --out " + f).code == 0);

    RunResult g6 = run("graph --in " + f + " --format graph6");
    REQUIRE(g6.code == 0);
    // n = 72 > 62: 4 header bytes, then ceil(72*71/2 / 6) = 426 data bytes
    REQUIRE(g6.out.size() == 431);
    CHECK(g6.out[0] == 126);
    CHECK(g6.out.back() == '\n');
    for (size_t i = 1; i + 1 < g6.out.size(); ++i) {
        CHECK(g6.out[i] >= 63);
        CHECK(g6.out[i] <= 126);
    }

    RunResult gj = run("graph --in " + f + " --format json");
    REQUIRE(gj.code == 0);
    json doc = json::parse(gj.out);
    CHECK(doc.at("n") == 72);
    CHECK(doc.at("edges").size() == 900); // 25-regular on 72 vertices
    CHECK(doc.at("labels").size() == 72);
    CHECK(doc.contains("fingerprint"));
    std::remove(f.c_str());
}

TEST_CASE("local-check accepts the 96-set") {
    std::string f = temp_path("local96.json");
    REQUIRE(run("construct spread96 --out " + f).code == 0);
    RunResult r = run("local-check --in " + f);
    REQUIRE(r.code == 0);
    json doc = json::parse(r.out);
    CHECK(doc.at("vertices") == 96);
    CHECK(doc.at("all_local_rook") == true);
    std::remove(f.c_str());
}

TEST_CASE("search subcommand emits a deterministic report") {
    std::string args =
        "search --seed first-line --min-size 72 --max-size 72 --budget-nodes 200000";
    RunResult a = run(args, "HYPEROVAL_THREADS=1");
    RunResult b = run(args, "HYPEROVAL_THREADS=2");
    REQUIRE(a.code == 0);
    CHECK(a.out == b.out); // thread hint must not leak into the report
    json doc = json::parse(a.out);
    CHECK(doc.at("nodes") == 200000);
    CHECK(doc.at("exhausted") == true);
    REQUIRE(doc.at("found").size() >= 1);
    for (const auto& s : doc.at("found")) CHECK(s.size() == 72);
    CHECK(doc.at("config").at("seed") == "first-line");

    // --out writes the same bytes as stdout
    std::string f = temp_path("report.json");
    REQUIRE(run(args + " --out " + f).code == 0);
    CHECK(read_text_file(f) == a.out);
    std::remove(f.c_str());
}

TEST_CASE("generalize q=8") {
    RunResult r = run("generalize --q 8");
    REQUIRE(r.code == 0);
    json doc = json::parse(r.out);
    CHECK(doc.at("size") == 1568);
    CHECK(doc.at("histogram").size() == 2);
    CHECK(doc.at("histogram").contains("0"));
    CHECK(doc.at("histogram").contains("4"));
    CHECK(doc.at("fingerprint").at("q") == 8);
}

TEST_CASE("usage and input errors exit 2") {
    CHECK(run("bogus-subcommand").code == 2);
    CHECK(run("verify").code == 2);                        // missing --in
    CHECK(run("construct nonsense").code == 2);            // bad kind
    CHECK(run("construct spread96 --orbit 4").code == 2);  // orbit out of range
    CHECK(run("verify --in no_such_file.json").code == 2); // unreadable input
    CHECK(run("graph --in x.json --format dot").code == 2);
    CHECK(run("").code == 2); // subcommand required

    std::string f = temp_path("wrong_q.json");
    write_text_file(f, "{\"fingerprint\":{\"q\":8,\"modulus\":11,\"table_hash\":\"x\"},"
                       "\"lines\":[0]}\n");
    CHECK(run("verify --in " + f).code == 2); // fingerprint mismatch
    std::remove(f.c_str());
}

TEST_CASE("help exits 0") {
    CHECK(run("--help").code == 0);
    CHECK(run("search --help").code == 0);
}
