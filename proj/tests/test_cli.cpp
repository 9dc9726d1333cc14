#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sys/wait.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "rainbow/cli.hpp"
#include "rainbow/coloring.hpp"
#include "rainbow/constructions.hpp"
#include "rainbow/generators.hpp"
#include "rainbow/graph_io.hpp"
#include "rainbow/report.hpp"

using namespace rainbow;
namespace fs = std::filesystem;

namespace {

struct Run {
    int code;
    std::string out;
    std::string err;
};

Run run(std::vector<std::string> args) {
    std::ostringstream out;
    std::ostringstream err;
    const int code = cli::dispatch(args, out, err);
    return {code, out.str(), err.str()};
}

struct TempDir {
    fs::path path;
    TempDir() : path(fs::temp_directory_path() / "rainbow_test_cli") { fs::create_directories(path); }
    ~TempDir() { fs::remove_all(path); }
    std::string file(const std::string& name, const std::string& content) const {
        const auto p = path / name;
        std::ofstream(p) << content;
        return p.string();
    }
    std::string at(const std::string& name) const { return (path / name).string(); }
};

std::string slurp(const std::string& p) {
    std::ifstream in(p);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

}  // namespace

TEST_CASE("verify: two-clique witness passes, corrupted colouring fails") {
    TempDir tmp;
    const auto g = tmp.at("w.txt");
    const auto c = tmp.at("c.txt");
    const Run built = run({"construct", "two-clique", "--n", "12", "--e", "37", "--out", g, "--colors", c});
    REQUIRE(built.code == 0);
    CHECK(built.err.find("colors=45") != std::string::npos);

    const Run ok = run({"verify", "--graph", g, "--colors", c, "--L", "9"});
    CHECK(ok.code == 0);
    CHECK(ok.out.rfind("pass:", 0) == 0);

    const Graph graph = read_graph_file(g);
    EdgeColoring col = parse_coloring(graph, slurp(c));
    col.colors[1] = col.colors[0];  // (0,1) and (0,2) now share a colour
    const auto bad = tmp.file("bad.txt", format_coloring(graph, col));
    const Run fail = run({"verify", "--graph", g, "--colors", bad, "--L", "9"});
    CHECK(fail.code == 1);
    CHECK(fail.out.find("cycle ") != std::string::npos);
    CHECK(fail.out.find("repeated ") != std::string::npos);
}

TEST_CASE("usage errors exit 64") {
    CHECK(run({"frobnicate"}).code == 64);
    CHECK(run({}).code == 64);
    CHECK(run({"verify", "--graph"}).code == 64);
    CHECK(run({"verify", "--graph", "/nonexistent/g.txt", "--colors", "/nonexistent/c.txt", "--L", "5"}).code ==
          64);
    CHECK(run({"--help"}).code == 0);
    TempDir tmp;
    const auto broken = tmp.file("broken.txt", "3 2\n0 1\n0 0\n");
    CHECK(run({"lemma", "book", "--graph", broken}).code == 64);
}

TEST_CASE("lemma subcommands map preconditions to 2 and search failures to 3") {
    TempDir tmp;
    const auto k6 = tmp.file("k6.txt", format_graph(gen::complete(6)));
    const auto c5 = tmp.file("c5.txt", format_graph(gen::cycle(5)));
    const auto p6 = tmp.file("p6.txt", format_graph(gen::path(6)));
    const auto two = tmp.file("two.txt", format_graph(gen::disjoint_union(gen::complete(5), gen::complete(5))));

    const Run cs = run({"lemma", "close-set", "--graph", k6});
    CHECK(cs.code == 0);
    CHECK(cs.out.find("size 6") != std::string::npos);
    CHECK(run({"lemma", "close-set", "--graph", p6}).code == 2);

    const Run p4 = run({"lemma", "path4", "--graph", k6, "--x", "0", "--y", "1"});
    CHECK(p4.code == 0);
    CHECK(p4.out.find("path 0-2-3-4-1") != std::string::npos);
    CHECK(run({"lemma", "path4", "--graph", two, "--x", "0", "--y", "5"}).code == 3);

    CHECK(run({"lemma", "greedy", "--graph", k6, "--v", "0", "--len", "3", "--avoid", "4,5"}).code == 0);
    CHECK(run({"lemma", "greedy", "--graph", c5, "--v", "0", "--len", "3", "--avoid", "1"}).code == 2);
    CHECK(run({"lemma", "book", "--graph", c5}).code == 2);

    const Run chk = run({"lemma", "check", "--graph", two, "--context", "path4"});
    CHECK(chk.code == 2);
    CHECK(run({"lemma", "check", "--graph", k6, "--context", "close-set"}).code == 0);
    CHECK(run({"lemma", "check", "--graph", k6, "--context", "nope"}).code == 2);

    const auto t = tmp.at("t.txt");
    const Run tight = run({"lemma", "tightness", "--n", "20", "--e", "104", "--out", t});
    CHECK(tight.code == 2);
}

TEST_CASE("route prints a verified cycle or exits 3") {
    TempDir tmp;
    const auto k12 = tmp.file("k12.txt", format_graph(gen::complete(12)));
    const Run r = run({"route", "--graph", k12, "--k", "4", "--case", "case1", "--edge1", "0,1", "--edge2", "2,3"});
    CHECK(r.code == 0);
    CHECK(r.out.rfind("cycle ", 0) == 0);

    const auto c9 = tmp.file("c9.txt", format_graph(gen::cycle(9)));
    CHECK(run({"route", "--graph", c9, "--k", "4", "--case", "claim1", "--edge1", "0,1", "--edge2", "4,5"}).code ==
          3);
    CHECK(run({"route", "--graph", k12, "--k", "3", "--case", "case1", "--edge1", "0,1", "--edge2", "2,3"}).code ==
          2);
    CHECK(run({"route", "--graph", k12, "--k", "4", "--case", "case1", "--edge1", "0", "--edge2", "2,3"}).code ==
          64);

    const auto k20 = tmp.file("k20.txt", format_graph(gen::complete(20)));
    const Run b = run({"route", "--graph", k20, "--case", "case2", "--book", "0,1", "--edge1", "2,3", "--edge2",
                       "3,4"});
    CHECK(b.code == 0);
    CHECK(b.out.find("case2-adjacent") != std::string::npos);
}

TEST_CASE("conflict, min-colors and oracle") {
    TempDir tmp;
    const auto k4 = tmp.file("k4.txt", format_graph(gen::complete(4)));
    const Run c = run({"conflict", "--graph", k4, "--L", "3", "--witnesses"});
    CHECK(c.code == 0);
    CHECK(c.out.find("# 6 edges, 12 conflict pairs") != std::string::npos);
    CHECK(c.out.find("# edge 0: 0 1") != std::string::npos);

    const auto colors = tmp.at("mc.txt");
    const Run m = run({"min-colors", "--graph", k4, "--L", "3", "--colors-out", colors});
    CHECK(m.code == 0);
    CHECK(m.out.find("colors 3") != std::string::npos);
    CHECK(run({"verify", "--graph", k4, "--colors", colors, "--L", "3"}).code == 0);

    const auto k12 = tmp.file("k12.txt", format_graph(gen::complete(12)));
    CHECK(run({"min-colors", "--graph", k12, "--L", "9"}).code == 2);

    const Run o = run({"oracle", "--n", "4", "--e", "5", "--L", "3"});
    CHECK(o.code == 0);
    CHECK(o.out.find("value 3") != std::string::npos);
    CHECK(run({"oracle", "--n", "8", "--e", "5", "--L", "3"}).code == 2);
}

TEST_CASE("formula and report") {
    const Run f = run({"formula", "--n", "100", "--e", "2600", "--k", "4", "--eps", "0.005", "--csv"});
    CHECK(f.code == 0);
    CHECK(f.out.find("100,2600,4,") != std::string::npos);
    CHECK(f.out.find(",2080,1800.000000,") != std::string::npos);
    CHECK(run({"formula", "--n", "100", "--e", "2500"}).code == 2);

    const Run r = run({"report", "--n", "100,10", "--fractions", "0.26"});
    CHECK(r.code == 0);
    std::istringstream lines(r.out);
    std::string header;
    std::string row1;
    std::string row2;
    std::getline(lines, header);
    std::getline(lines, row1);
    std::getline(lines, row2);
    CHECK(header == kReportHeader);
    CHECK(row1.rfind("100,2600,4,2080,1800.000000,280.000000,", 0) == 0);
    CHECK(row2.rfind("10,26,4,36,18.000000,18.000000,", 0) == 0);
    CHECK(run({"report", "--n", "", "--fractions", "0.26"}).code != 0);
    CHECK(run({"report", "--n", "10", "--fractions", "0.9"}).code == 2);
}

TEST_CASE("report rows") {
    const auto rows = report_rows({100, 10}, {0.26}, 4);
    REQUIRE(rows.size() == 2);
    CHECK(rows[0].e == 2600);
    CHECK(rows[0].upper_bound == 2080);
    CHECK(rows[0].asymptotic == doctest::Approx(1800.0));
    CHECK(rows[0].slack == doctest::Approx(280.0));
    CHECK(rows[1].e == 26);
    CHECK(rows[1].upper_bound == 36);
    CHECK(rows[1].asymptotic == doctest::Approx(18.0));
    CHECK_THROWS(report_rows({}, {0.26}, 4));
}

TEST_CASE("the installed binary runs end to end") {
    const char* path = RAINBOW_CLI_PATH;
    REQUIRE(fs::exists(path));
    TempDir tmp;
    const auto out = tmp.at("stdout.txt");
    const std::string cmd = std::string("\"") + path + "\" oracle --n 5 --e 7 --L 3 > \"" + out + "\" 2>&1";
    const int status = std::system(cmd.c_str());
    CHECK(status == 0);
    CHECK(slurp(out).find("value 3") != std::string::npos);
    const std::string bad = std::string("\"") + path + "\" nonsense > /dev/null 2>&1";
    const int st = std::system(bad.c_str());
    CHECK(WEXITSTATUS(st) == 64);
}
