#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cstdio>
#include <fstream>
#include <sstream>
#include <vector>

#include "mnsd/cli.hpp"

namespace {

struct CliResult {
    int code = 0;
    std::string out;
    std::string err;
};

CliResult run(std::initializer_list<const char*> args) {
    std::vector<const char*> argv{"mnsd"};
    argv.insert(argv.end(), args.begin(), args.end());
    std::ostringstream out;
    std::ostringstream err;
    const int code =
        mnsd::io::run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
    return {code, out.str(), err.str()};
}

bool contains(const std::string& haystack, const std::string& needle) {
    return haystack.find(needle) != std::string::npos;
}

} // namespace

TEST_CASE("classify prints the survivors") {
    const auto r = run({"classify", "--dim", "441"});
    CHECK(r.code == 0);
    CHECK(contains(r.out, "(1,3;3,16;7,6)"));
    CHECK(contains(r.out, "(1,441)"));
    CHECK(contains(r.out, "dimension 441 = 3^2*7^2"));
}

TEST_CASE("classify rejects an even dimension with exit 2") {
    const auto r = run({"classify", "--dim", "442"});
    CHECK(r.code == 2);
    CHECK(contains(r.err, "odd-dimensional"));
}

TEST_CASE("classify --compare-paper agrees on the legacy basic stage") {
    const auto r = run({"classify", "--dim", "729", "--filters", "basic", "--f2-mode", "legacy",
                        "--compare-paper"});
    CHECK(r.code == 0);
    CHECK(contains(r.out, "exact match"));
}

TEST_CASE("classify --compare-paper flags strict-mode extras with exit 3") {
    const auto r = run({"classify", "--dim", "729", "--filters", "basic", "--f2-mode", "strict",
                        "--compare-paper"});
    CHECK(r.code == 3);
    CHECK(contains(r.out, "extra in engine: (1,9;3,44;9,4)"));
}

TEST_CASE("classify --compare-paper outside the reference set is invalid input") {
    const auto r = run({"classify", "--dim", "35", "--compare-paper"});
    CHECK(r.code == 2);
}

TEST_CASE("scan usage errors") {
    CHECK(run({"scan", "--max", "0"}).code == 1);
    CHECK(run({"bogus"}).code == 1);
    CHECK(run({}).code == 1);
}

TEST_CASE("scan of a small range prints pointed-only lines") {
    const auto r = run({"scan", "--max", "10"});
    CHECK(r.code == 0);
    CHECK(contains(r.out, "N=9 [3^2] raw=1 survivors=1 non-pointed=0"));
    CHECK(contains(r.out, "none"));
}

TEST_CASE("scan reports the non-pointed table") {
    const auto r = run({"scan", "--max", "500"});
    CHECK(r.code == 0);
    CHECK(contains(r.out, "441: (1,3;3,16;7,6)"));
}

TEST_CASE("explain prints one line per filter with citations") {
    const auto r = run({"explain", "--dim", "243", "--type", "(1,9;3,26)"});
    CHECK(r.code == 0);
    CHECK(contains(r.out, "f13"));
    CHECK(contains(r.out, "either pointed or perfect"));
    CHECK(contains(r.out, "reject"));
}

TEST_CASE("explain validates the type against the dimension") {
    const auto r = run({"explain", "--dim", "441", "--type", "(1,3;3,16;7,7)"});
    CHECK(r.code == 2);
    CHECK(contains(r.err, "490"));
    const auto bad = run({"explain", "--dim", "441", "--type", "(3,16;1,3)"});
    CHECK(bad.code == 2);
}

TEST_CASE("explain on a pointed survivor has no rejects") {
    const auto r = run({"explain", "--dim", "441", "--type", "(1,441)"});
    CHECK(r.code == 0);
    CHECK(!contains(r.out, "reject "));
}

TEST_CASE("filters command lists the catalog") {
    const auto r = run({"filters"});
    CHECK(r.code == 0);
    CHECK(contains(r.out, "f18"));
    CHECK(contains(r.out, "Lemma 3.3"));
    CHECK(contains(r.out, "structural"));
}

TEST_CASE("json output is stable across runs") {
    const auto a = run({"scan", "--max", "300", "--format", "json"});
    const auto b = run({"scan", "--max", "300", "--format", "json"});
    CHECK(a.code == 0);
    CHECK(a.out == b.out);
    CHECK(contains(a.out, "\"engine_version\""));
    CHECK(!contains(a.out, "elapsed"));
}

TEST_CASE("csv output has the documented header") {
    const auto r = run({"classify", "--dim", "225", "--format", "csv"});
    CHECK(r.code == 0);
    CHECK(contains(r.out, "dimension,stage,type,outcome,filter,citation,reason"));
    CHECK(contains(r.out, "225,final,\"(1,225)\",survivor"));
}

TEST_CASE("configuration file provides defaults and flags override it") {
    const std::string path = "test_cli_config.tmp";
    {
        std::ofstream f(path);
        f << "# defaults for the test\nformat=json\nf2-mode=strict\n";
    }
    const auto from_config = run({"classify", "--dim", "225", "--config", path.c_str()});
    CHECK(from_config.code == 0);
    CHECK(contains(from_config.out, "\"f2_mode\": \"strict\""));

    const auto overridden = run({"classify", "--dim", "225", "--config", path.c_str(),
                                 "--format", "table", "--f2-mode", "legacy"});
    CHECK(overridden.code == 0);
    CHECK(contains(overridden.out, "mode full, f2-mode legacy"));

    {
        std::ofstream f(path);
        f << "bogus=1\n";
    }
    CHECK(run({"classify", "--dim", "225", "--config", path.c_str()}).code == 1);
    std::remove(path.c_str());
}

TEST_CASE("output flag writes the report to a file") {
    const std::string path = "test_cli_output.tmp";
    const auto r = run({"classify", "--dim", "441", "--format", "json", "--output",
                        path.c_str()});
    CHECK(r.code == 0);
    CHECK(r.out.empty());
    std::ifstream in(path);
    REQUIRE(in.good());
    std::ostringstream ss;
    ss << in.rdbuf();
    CHECK(contains(ss.str(), "(1,3;3,16;7,6)"));
    std::remove(path.c_str());
}

TEST_CASE("timing fields appear only on request") {
    const auto timed = run({"classify", "--dim", "225", "--format", "json", "--timing"});
    CHECK(contains(timed.out, "elapsed_ms"));
    const auto plain = run({"classify", "--dim", "225", "--format", "json"});
    CHECK(!contains(plain.out, "elapsed_ms"));
}
