#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "bca/cli.hpp"

using namespace bca;

namespace {

struct RunResult {
    int exit_code;
    std::string out;
    std::string err;
};

RunResult run(std::vector<std::string> args) {
    std::ostringstream out, err;
    int code = run_cli(std::move(args), out, err);
    return {code, out.str(), err.str()};
}

std::string write_temp(const std::string& name, const std::string& content) {
    std::filesystem::path dir = std::filesystem::temp_directory_path() / "bca-cli-tests";
    std::filesystem::create_directories(dir);
    std::filesystem::path file = dir / name;
    std::ofstream(file) << content;
    return file.string();
}

const char* kPath3 =
    "name: path3\n"
    "atoms: a b c\n"
    "contact: adjacency\n"
    "edges: a-b b-c\n";

const char* kOverlap3 =
    "atoms: a b c\n"
    "contact: overlap\n";

}  // namespace

TEST_CASE("check reports axioms and exits 1 on failures") {
    std::string file = write_temp("path3.bca", kPath3);
    RunResult r = run({"check", file});
    CHECK(r.exit_code == 1);
    CHECK(r.out.find("C0: pass") != std::string::npos);
    CHECK(r.out.find("C5: pass") != std::string::npos);
    CHECK(r.out.find("DV7: fail (witness x={a})") != std::string::npos);
}

TEST_CASE("ro eval") {
    RunResult r = run({"ro", "eval", "(1,2) << (0,3)"});
    CHECK(r.exit_code == 0);
    CHECK(r.out == "true\n");
    RunResult v = run({"ro", "eval", "tail(4,0,(0,1)) & (2,9)"});
    CHECK(v.exit_code == 0);
    CHECK(v.out == "(4,5)|(8,9)\n");
    RunResult bad = run({"ro", "eval", "(1,0)"});
    CHECK(bad.exit_code == 2);
    CHECK(bad.err.find("1:1") != std::string::npos);
}

TEST_CASE("points enumeration") {
    std::string file = write_temp("overlap3.bca", kOverlap3);
    RunResult r = run({"points", file, "--kind", "grz"});
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("grz points: 3") != std::string::npos);
    RunResult ends = run({"points", write_temp("path3.bca", kPath3), "--kind", "ends"});
    CHECK(ends.out.find("ends points: 1") != std::string::npos);
}

TEST_CASE("space and duality emit valid deterministic json") {
    std::string file = write_temp("overlap3.bca", kOverlap3);
    RunResult a = run({"space", file, "--kind", "stone", "--emit", "json"});
    RunResult b = run({"space", file, "--kind", "stone", "--emit", "json"});
    CHECK(a.out == b.out);  // byte identical
    nlohmann::json doc = nlohmann::json::parse(a.out);
    CHECK(doc.contains("verdicts"));
    for (const auto& verdict : doc["verdicts"]) {
        CHECK(verdict.contains("axiom"));
        CHECK(verdict.contains("verdict"));
    }
    RunResult d = run({"duality", file, "--kind", "stone", "--emit", "json"});
    CHECK(d.exit_code == 0);
    nlohmann::json ddoc = nlohmann::json::parse(d.out);
    CHECK(ddoc["verdicts"][0]["axiom"] == "stone-isomorphism");
    CHECK(ddoc["verdicts"][0]["verdict"] == "pass");
}

TEST_CASE("demo families") {
    RunResult tails = run({"demo", "tails", "--depth", "10"});
    CHECK(tails.exit_code == 1);
    CHECK(tails.out.find("tail(4,0,(0,1))") != std::string::npos);
    CHECK(tails.out.find("tail(4,0,(2,3))") != std::string::npos);
    CHECK(tails.out.find("counterexample chain prefix") != std::string::npos);

    RunResult expected = run({"demo", "tails", "--depth", "10", "--expect-fail"});
    CHECK(expected.exit_code == 0);

    RunResult origin = run({"demo", "origin", "--depth", "10"});
    CHECK(origin.exit_code == 0);
    CHECK(origin.out.find("holds-to-depth 10") != std::string::npos);

    RunResult dv = run({"demo", "deVriesNotEnd", "--depth", "10"});
    CHECK(dv.exit_code == 0);

    RunResult stripes = run({"demo", "stripes4", "--depth", "10"});
    CHECK(stripes.exit_code == 0);

    RunResult ctrex = run({"demo", "counterexample", "--depth", "8"});
    CHECK(ctrex.exit_code == 1);
    RunResult ctrex_ok = run({"demo", "counterexample", "--depth", "8", "--expect-fail"});
    CHECK(ctrex_ok.exit_code == 0);
}

TEST_CASE("usage and parse errors exit 2") {
    CHECK(run({"frobnicate"}).exit_code == 2);
    CHECK(run({}).exit_code == 2);
    CHECK(run({"check", "/nonexistent/file.bca"}).exit_code == 2);
    std::string bad = write_temp("bad.bca", "atoms: a b\ncontact: strange\n");
    RunResult r = run({"check", bad});
    CHECK(r.exit_code == 2);
    CHECK(r.err.find("2:") != std::string::npos);  // line 2
    CHECK(run({"demo", "unknown-family"}).exit_code == 2);
    CHECK(run({"points", write_temp("o.bca", kOverlap3), "--kind", "bogus"}).exit_code == 2);
}

TEST_CASE("json check report is deterministic across runs") {
    std::string file = write_temp("path3.bca", kPath3);
    RunResult a = run({"check", file, "--emit", "json"});
    RunResult b = run({"check", file, "--emit", "json"});
    CHECK(a.out == b.out);
    CHECK(a.exit_code == 1);
    nlohmann::json doc = nlohmann::json::parse(a.out);
    bool saw_dv7 = false;
    for (const auto& verdict : doc["verdicts"])
        if (verdict["axiom"] == "DV7") {
            saw_dv7 = true;
            CHECK(verdict["verdict"] == "fail");
            CHECK(verdict["witness"] == "x={a}");
        }
    CHECK(saw_dv7);
}
