#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sys/wait.h>
#include <unistd.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "qlc/serialize.hpp"
#include "qlc/triangles.hpp"

namespace fs = std::filesystem;
using qlc::json;

namespace {

struct RunResult {
    int code = -1;
    std::string out;
    std::string err;
};

const fs::path& work_dir() {
    static const fs::path dir = [] {
        fs::path d = fs::temp_directory_path() /
                     ("qlc_cli_test_" + std::to_string(static_cast<long>(::getpid())));
        fs::create_directories(d);
        return d;
    }();
    return dir;
}

std::string slurp(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

RunResult run(const std::string& args) {
    const fs::path out = work_dir() / "stdout.txt";
    const fs::path err = work_dir() / "stderr.txt";
    const std::string cmd =
        std::string(QLC_CLI_PATH) + " " + args + " >" + out.string() + " 2>" + err.string();
    const int raw = std::system(cmd.c_str());
    RunResult r;
    r.code = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
    r.out = slurp(out);
    r.err = slurp(err);
    return r;
}

fs::path write_file(const std::string& name, const std::string& contents) {
    const fs::path p = work_dir() / name;
    std::ofstream out(p, std::ios::binary);
    out << contents;
    return p;
}

}  // namespace

TEST_CASE("triangle csv golden output") {
    const RunResult r = run("triangle --family catalan-aigner --rows 4 --format csv");
    CHECK(r.code == 0);
    CHECK(r.out == "1\n1,1\n2,3,1\n5,9,5,1\n");
}

TEST_CASE("triangle json round-trips") {
    const RunResult r = run("triangle --family bell-poly --rows 6 --format json");
    REQUIRE(r.code == 0);
    const qlc::Triangle parsed = qlc::triangle_from_json(json::parse(r.out));
    CHECK(parsed == qlc::build(qlc::builtin("bell-poly"), 6));
}

TEST_CASE("triangle output is byte-identical across runs") {
    const RunResult a = run("triangle --family eulerian-poly --rows 7 --format json");
    const RunResult b = run("triangle --family eulerian-poly --rows 7 --format json");
    CHECK(a.out == b.out);
    CHECK(a.code == 0);
}

TEST_CASE("triangle eval-q and column") {
    const RunResult r = run("triangle --family bell-poly --rows 4 --eval-q 1 --format csv");
    CHECK(r.code == 0);
    CHECK(r.out == "1\n1,1\n2,3,1\n5,10,6,1\n");

    const RunResult c = run("triangle --family catalan-aigner --rows 5 --column 0 --format csv");
    CHECK(c.code == 0);
    CHECK(c.out == "1,1,2,5,14\n");

    const RunResult cj = run("triangle --family catalan-aigner --rows 5 --column 0 --format json");
    CHECK(cj.code == 0);
    CHECK(json::parse(cj.out) == json::parse(R"([["1"],["1"],["2"],["5"],["14"]])"));

    const RunResult ej =
        run("triangle --family bell-poly --rows 3 --eval-q 1/2 --format json");
    CHECK(ej.code == 0);
    CHECK(json::parse(ej.out) == json::parse(R"([["1"],["1/2","1"],["3/4","2","1"]])"));
}

TEST_CASE("triangle pretty format") {
    const RunResult r = run("triangle --family bell-poly --rows 4");
    CHECK(r.code == 0);
    CHECK(r.out ==
          "[0] 1\n"
          "[1] q, 1\n"
          "[2] q^2+q, 2*q+1, 1\n"
          "[3] q^3+3*q^2+q, 3*q^2+6*q+1, 3*q+3, 1\n");
}

TEST_CASE("triangle from a spec file") {
    const fs::path spec = write_file("pascal.json", R"({"name":"pascal","f":"1","g":"1","h":"0"})");
    const RunResult r = run("triangle --spec " + spec.string() + " --rows 5 --format csv");
    CHECK(r.code == 0);
    CHECK(r.out == "1\n1,1\n1,2,1\n1,3,3,1\n1,4,6,4,1\n");
}

TEST_CASE("check strong-q-log-concave on a narayana row") {
    const fs::path row = write_file(
        "narayana_row3.json", R"([["0","1","3","1"],["1","5","3"],["2","3"],["1"]])");
    const RunResult r = run("check strong-q-log-concave --input " + row.string());
    CHECK(r.code == 0);
    const json rep = json::parse(r.out);
    CHECK(rep["holds"] == true);
    CHECK(r.err.empty());
}

TEST_CASE("failing check exits 1 with a witness on stderr") {
    const fs::path seq = write_file("incomparable.json", R"([["1"],["0","1"],["1"]])");
    const RunResult r = run("check strong-q-log-concave --input " + seq.string());
    CHECK(r.code == 1);
    const json witness = json::parse(r.err);
    CHECK(witness["witness"]["i"] == 1);
    const json rep = json::parse(r.out);
    CHECK(rep["holds"] == false);
}

TEST_CASE("check remaining polynomial properties") {
    const fs::path bell2 = write_file("bell_row2.json", R"([["0","1","1"],["1","2"],["1"]])");
    CHECK(run("check q-log-concave --input " + bell2.string()).code == 0);

    const fs::path catalan_polys = write_file("catalan_polys.json",
                                              R"([["1"],["1"],["2"],["5"]])");
    CHECK(run("check strong-q-log-convex --input " + catalan_polys.string()).code == 0);
    CHECK(run("check strong-q-log-concave --input " + catalan_polys.string()).code == 1);
}

TEST_CASE("check numeric properties") {
    const fs::path lc = write_file("motzkin_row3.json", R"(["4","5","3","1"])");
    CHECK(run("check log-concave --input " + lc.string()).code == 0);

    const fs::path catalan = write_file("catalan.json", R"(["1","1","2","5","14"])");
    CHECK(run("check log-convex --input " + catalan.string()).code == 0);
    CHECK(run("check log-concave --input " + catalan.string()).code == 1);

    const fs::path window = write_file("window.json", R"(["1","2","1"])");
    CHECK(run("check tp2-window --input " + window.string()).code == 0);
    const fs::path badwin = write_file("badwin.json", R"(["1","1","3"])");
    CHECK(run("check tp2-window --input " + badwin.string()).code == 1);
}

TEST_CASE("check with eval-q") {
    const fs::path row = write_file("bellpoly_row3.json",
                                    R"([["0","1","3","1"],["1","6","3"],["3","3"],["1"]])");
    const RunResult r = run("check log-concave --eval-q 1 --input " + row.string());
    CHECK(r.code == 0);
    // a polynomial input without --eval-q is a usage error for numeric checks
    CHECK(run("check log-concave --input " + row.string()).code == 2);
}

TEST_CASE("check internal-zeros") {
    const fs::path clean = write_file("clean.json", R"(["0","1","2","0"])");
    CHECK(run("check internal-zeros --input " + clean.string()).code == 0);
    const fs::path dirty = write_file("dirty.json", R"(["1","0","1"])");
    const RunResult r = run("check internal-zeros --input " + dirty.string());
    CHECK(r.code == 1);
    CHECK(json::parse(r.err)["witness"]["i"] == 1);
}

TEST_CASE("input preconditions map to exit 2") {
    const fs::path dirty = write_file("dirty2.json", R"(["1","0","1"])");
    CHECK(run("check log-concave --input " + dirty.string()).code == 2);
    const fs::path neg = write_file("neg.json", R"(["1","-2","1"])");
    CHECK(run("check log-concave --input " + neg.string()).code == 2);
}

TEST_CASE("transform binomial") {
    const fs::path ones = write_file("ones.json", R"([["1"],["1"],["1"],["1"]])");
    const RunResult r = run("transform binomial --a 0 --b 0 --input " + ones.string() + " --upto 3");
    CHECK(r.code == 0);
    CHECK(json::parse(r.out) == json::parse(R"([["1"],["2"],["4"],["8"]])"));

    const RunResult r2 =
        run("transform binomial --a 1 --b 0 --input " + ones.string() + " --upto 5");
    CHECK(r2.code == 2);  // insufficient input
}

TEST_CASE("transform window and multinomial") {
    const fs::path w = write_file("w121.json", R"(["1","2","1"])");
    const fs::path x = write_file("x.json", R"([["1"],["3"],["4"],["3"],["1"]])");
    const RunResult r = run("transform window --weights " + w.string() + " --input " + x.string());
    CHECK(r.code == 0);
    CHECK(json::parse(r.out) == json::parse(R"([["11"],["14"],["11"]])"));

    const fs::path nums = write_file("nums.json", R"(["1","1","1","1","1","1","1","1","1"])");
    const RunResult m = run("transform multinomial --weights " + w.string() + " --input " +
                            nums.string() + " --upto 4");
    CHECK(m.code == 0);
    CHECK(json::parse(m.out) == json::parse(R"(["1","4","16","64","256"])"));

    const fs::path badw = write_file("badw.json", R"(["1","1","3"])");
    CHECK(run("transform window --weights " + badw.string() + " --input " + x.string()).code == 2);
}

TEST_CASE("verify thm41") {
    const RunResult good = run("verify thm41 --family bell-poly --max-n 8");
    CHECK(good.code == 0);
    const json rep = json::parse(good.out);
    CHECK(rep["overall"] == true);
    CHECK(rep["max_n"] == 8);

    const RunResult warned = run("verify thm41 --family narayana-poly --max-n 6");
    CHECK(warned.code == 0);
    CHECK(warned.err.find("warning:") != std::string::npos);

    const RunResult bad = run("verify thm41 --family eulerian-poly --max-n 6");
    CHECK(bad.code == 1);
    const json failed = json::parse(bad.err);
    CHECK(failed["fh-cross"]["n"] == 1);
}

TEST_CASE("verify works from a spec file") {
    const fs::path spec = write_file(
        "aigner.json", R"({"name":"aigner","f":"1","g":"2","h":"1","boundary":{"g0":"1"}})");
    CHECK(run("verify thm41 --spec " + spec.string() + " --max-n 6").code == 0);
    CHECK(run("verify proposition --spec " + spec.string()).code == 0);
    CHECK(run("verify conclusion --spec " + spec.string() + " --max-n 8").code == 0);
}

TEST_CASE("verify proposition and conclusion") {
    CHECK(run("verify proposition --family catalan-aigner").code == 0);
    CHECK(run("verify proposition --family narayana-poly").code == 0);
    CHECK(run("verify proposition --family bell-poly").code == 2);  // k-dependent shape

    const fs::path scaled = write_file("scaledf.json", R"({"name":"t","f":"2","g":"3","h":"1"})");
    CHECK(run("verify proposition --spec " + scaled.string()).code == 2);  // needs f = 1

    CHECK(run("verify conclusion --family eulerian-poly --max-n 10").code == 0);
    CHECK(run("verify conclusion --family motzkin --max-n 12").code == 0);
}

TEST_CASE("identities") {
    const RunResult r = run("identities --max-a 30");
    CHECK(r.code == 0);
    CHECK(json::parse(r.out)["holds"] == true);
}

TEST_CASE("usage errors exit 2") {
    CHECK(run("").code == 2);
    CHECK(run("triangle --rows 4").code == 2);                      // no source
    CHECK(run("triangle --family nope --rows 4").code == 2);        // unknown family
    CHECK(run("triangle --family motzkin").code == 2);              // missing --rows
    CHECK(run("check log-concave --input /no/such/file.json").code == 2);
    CHECK(run("check bogus-property --input /dev/null").code == 2);
    CHECK(run("frobnicate").code == 2);
}
