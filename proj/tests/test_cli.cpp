#include "doctest.h"

#include <cstdio>
#include <fstream>
#include <sstream>

#include "howe/cli.hpp"
#include "howe/report.hpp"

using namespace howe;
using namespace howe::cli;

namespace {

struct Outcome {
    int code;
    std::string out;
    std::string err;
};

Outcome run_cli(std::vector<std::string> args) {
    args.insert(args.begin(), "howe");
    std::ostringstream out, err;
    const int code = main_entry(args, out, err);
    return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("parse_rational") {
    CHECK(parse_rational("1/2") == scalar(1, 2));
    CHECK(parse_rational("-3/6") == scalar(-1, 2));
    CHECK(parse_rational("4") == Scalar(4));
    CHECK_THROWS_WITH_AS(parse_rational("4", true), doctest::Contains("parameter must be a non-integer rational"),
                         ConfigError);
    CHECK_THROWS_AS(parse_rational("x", true), ConfigError);
    CHECK_THROWS_AS(parse_rational("1/0"), ConfigError);
}

TEST_CASE("exit codes") {
    CHECK(run_cli({"verify", "--n", "2", "--a1", "1/2", "--a2", "1/3"}).code == 0);
    const auto bad = run_cli({"verify", "--n", "2", "--a1", "4", "--a2", "1/3"});
    CHECK(bad.code == 2);
    CHECK(bad.out.empty());
    CHECK(bad.err.find("non-integer") != std::string::npos);
    CHECK(run_cli({"verify", "--n", "2", "--a1", "1/x", "--a2", "1/3"}).code == 2);
    CHECK(run_cli({"bogus", "--n", "2", "--a1", "1/2", "--a2", "1/3"}).code == 2);
    CHECK(run_cli({"branch", "--n", "1", "--a1", "1/2", "--a2", "1/3"}).code == 2);
    CHECK(run_cli({"branch", "--n", "2", "--a1", "1/2", "--a2", "1/3", "--b-min", "2", "--b-max", "1"}).code == 2);
    CHECK(run_cli({"hwv", "--n", "2", "--a1", "1/2", "--a2", "1/3", "--c", "-1"}).code == 2);
    CHECK(run_cli({"table", "--n", "2", "--a1", "1/2", "--a2", "1/3", "--variant", "x"}).code == 2);
}

TEST_CASE("help goes to stdout") {
    const auto r = run_cli({"--help"});
    CHECK(r.code == 0);
    CHECK(r.out.find("--variant") != std::string::npos);
    CHECK(r.err.empty());
}

TEST_CASE("hwv with oracle") {
    const auto r = run_cli({"hwv", "--n", "3", "--a1", "1/2", "--a2", "1/3", "--b", "0", "--c", "2", "--oracle"});
    CHECK(r.code == 0);
    const Json j = Json::parse(r.out);
    CHECK(j["terms"].size() == 6);
    CHECK(j["oracle"]["match"] == true);
    CHECK(j["oracle"]["kernel_dimension"] == 1);
    CHECK(j["oracle"]["weight_space_dimension"] == 6);
    CHECK(j["seed"] == 1);
}

TEST_CASE("branch with a1 = a2 has a crit_zero row") {
    const auto r = run_cli({"branch", "--n", "2", "--a1", "1/2", "--a2", "1/2"});
    CHECK(r.code == 0);
    const Json j = Json::parse(r.out);
    bool found = false;
    for (const auto& e : j["entries"]) {
        if (e["b"] == 0) {
            found = true;
            CHECK(e["regime"] == "crit_zero");
            CHECK(e["slN"]["hw"] == Json::array({"-1"}));
            CHECK(e["sl2"]["hw"] == Json::array({"-1"}));
        }
    }
    CHECK(found);
}

TEST_CASE("series and table commands") {
    const auto s = run_cli({"series", "--n", "3", "--a1", "3/2", "--a2", "1/2", "--b", "-1", "--format", "md"});
    CHECK(s.code == 0);
    CHECK(s.out.find("#") == 0);
    const auto t = run_cli({"table", "--n", "2", "--a1", "3/2", "--a2", "1/2", "--variant", "ss"});
    CHECK(t.code == 0);
    CHECK(Json::parse(t.out)["one_to_one"] == false);
}

TEST_CASE("verify output is deterministic") {
    const std::vector<std::string> base = {"verify", "--n", "3", "--a1", "3/2", "--a2", "1/2", "--samples", "10",
                                           "--seed", "42"};
    auto with_jobs = [&](const char* jobs) {
        auto args = base;
        args.push_back("--jobs");
        args.push_back(jobs);
        return run_cli(args);
    };
    const auto a = with_jobs("1");
    const auto b = with_jobs("1");
    const auto c = with_jobs("3");
    CHECK(a.code == 0);
    CHECK(a.out == b.out);
    CHECK(a.out == c.out);
    CHECK(Json::parse(a.out)["seed"] == 42);
}

TEST_CASE("config file with flag override") {
    const std::string path = "howe_cli_test.ini";
    {
        std::ofstream f(path);
        f << "n=2\na1=1/2\na2=1/3\nb=0\nc=3\n";
    }
    const auto r = run_cli({"hwv", "--config", path, "--c", "1"});
    std::remove(path.c_str());
    REQUIRE(r.code == 0);
    const Json j = Json::parse(r.out);
    CHECK(j["c"] == 1);
    CHECK(j["terms"][1]["coeff"] == "2/3");
}
