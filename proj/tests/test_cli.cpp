#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <fstream>
#include <sstream>
#include <vector>

#include "srcot/cli.hpp"
#include "srcot/gen.hpp"
#include "srcot/report.hpp"

using namespace srcot;

namespace {

struct CliResult {
    int code;
    std::string out;
    std::string err;
};

CliResult run(std::vector<const char*> args) {
    args.insert(args.begin(), "srcot");
    std::ostringstream out, err;
    int code = run_cli((int)args.size(), args.data(), out, err);
    return {code, out.str(), err.str()};
}

} // namespace

TEST_CASE("gen emits loadable JSON") {
    CliResult r = run({"gen", "octahedron"});
    REQUIRE(r.code == 0);
    SimplicialComplex x = parse_complex(r.out);
    CHECK(x.vertex_set().size() == 6);
    CHECK(x == make_generator("octahedron"));
}

TEST_CASE("report json output round-trips") {
    CliResult r = run({"report", "--gen", "sphere0", "--json"});
    REQUIRE(r.code == 0);
    ReportDocument doc = report_from_json(r.out);
    CHECK(doc == build_report(make_generator("sphere0")));
    CHECK(doc == report_from_json(report_to_json(doc)));
    REQUIRE(doc.rows.size() == 1);
    CHECK(doc.rows[0].t1 == 1);
}

TEST_CASE("report accepts plaintext facet files") {
    std::string path = "cli_test_input.txt";
    {
        std::ofstream f(path);
        f << "a b\nb c\nc a\n";
    }
    CliResult r = run({"report", path.c_str(), "--json"});
    REQUIRE(r.code == 0);
    ReportDocument doc = report_from_json(r.out);
    CHECK(doc.vertex_count == 3);
    CHECK(doc.rows.size() == 7);
}

TEST_CASE("all routes agree through the cli") {
    for (const char* route : {"n", "order", "u", "m", "all"}) {
        CliResult r = run({"report", "--gen", "ngon:5", "--route", route, "--json"});
        CHECK(r.code == 0);
        CHECK(report_from_json(r.out).rows.size() == 5);
    }
}

TEST_CASE("coarse filter restricts the slice table") {
    CliResult r = run({"report", "--gen", "ngon:6", "--json", "--coarse", "-2"});
    REQUIRE(r.code == 0);
    ReportDocument doc = report_from_json(r.out);
    REQUIRE(doc.coarse.size() == 2);
    for (const auto& s : doc.coarse) CHECK(s.d == -2);
}

TEST_CASE("piece prints dims and equations") {
    CliResult r = run({"piece", "--gen", "sphere0", "--b", "x0,x1"});
    REQUIRE(r.code == 0);
    CHECK(r.out.find("hom 1, t1 1, t2 0") != std::string::npos);
    CHECK(r.out.find("x0 x1 - eps") != std::string::npos);

    CliResult warn = run({"piece", "--gen", "ngon:4", "--a", "x0,x2", "--b", "x1"});
    CHECK(warn.code == 0);
    CHECK(warn.err.find("warning") != std::string::npos);
}

TEST_CASE("t0 reports the generation property") {
    CliResult r = run({"t0", "--gen", "ngon:5"});
    REQUIRE(r.code == 0);
    CHECK(r.out.find("yes") != std::string::npos);
}

TEST_CASE("quadratic names coordinates") {
    CliResult r = run({"quadratic", "--gen", "ngon:6"});
    REQUIRE(r.code == 0);
    CHECK(r.out.find("t0") != std::string::npos);
    CHECK(r.out.find("= 0") != std::string::npos);
}

TEST_CASE("localize runs on a degree-zero class") {
    CliResult r = run({"localize", "--gen", "octahedron-diagonals", "--a", "x,y",
                       "--b", "z,z2", "--v", "x", "--i", "1"});
    REQUIRE(r.code == 0);
    CHECK(r.out.find("t1 = 1") != std::string::npos);
}

TEST_CASE("check passes on well-behaved inputs") {
    CliResult r = run({"check", "--gen", "ngon:4"});
    REQUIRE(r.code == 0);
    CHECK(r.out.find("FAIL") == std::string::npos);
}

TEST_CASE("cup through the cli") {
    CliResult r = run({"cup", "--gen", "ngon:7", "--a1", "x3", "--b1", "x2,x4",
                       "--a2", "x4", "--b2", "x3,x5"});
    REQUIRE(r.code == 0);
    CHECK(r.out.find("coords:") != std::string::npos);
    CliResult z = run({"cup", "--gen", "ngon:7", "--a1", "x3", "--b1", "x2,x4",
                       "--a2", "x3", "--b2", "x2,x4"});
    REQUIRE(z.code == 0);
    CHECK(z.out.find("zero") != std::string::npos);
}

TEST_CASE("exit codes") {
    CHECK(run({"bogus"}).code == 1);
    CHECK(run({"report"}).code == 1);  // no input at all
    CHECK(run({"piece", "--gen", "sphere0", "--b", "nope"}).code == 1);
    CHECK(run({"report", "--gen", "ngon:9", "--cap", "5"}).code == 2);
    CHECK(run({"--help"}).code == 0);
    CHECK(run({"gen", "unknown-kind"}).code == 1);
}
