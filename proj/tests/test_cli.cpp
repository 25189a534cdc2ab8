#include "gracelab/cli.hpp"
#include "gracelab/json_io.hpp"
#include "gracelab/verify.hpp"

#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <sstream>

using namespace gracelab;

namespace {

struct Run {
    int code;
    std::string out;
    std::string err;
};

Run run(std::vector<std::string> args)
{
    std::ostringstream out, err;
    const int code = run_cli(args, out, err);
    return {code, out.str(), err.str()};
}

std::vector<json> json_lines(const std::string& text)
{
    std::vector<json> out;
    std::istringstream in(text);
    for (std::string line; std::getline(in, line);) {
        if (!line.empty()) out.push_back(json::parse(line));
    }
    return out;
}

std::string temp_path(const std::string& name) { return "gracelab_test_" + name; }

std::string slurp(const std::string& path)
{
    std::ifstream in(path);
    std::stringstream s;
    s << in.rdbuf();
    return s.str();
}

} // namespace

TEST_CASE("function json forms")
{
    const EndoFunction f{0, 0, 0, 0, 3, 3};
    CHECK(to_json(f).dump() == R"({"f":[0,0,0,0,3,3],"n":6})");
    CHECK(function_from_json(to_json(f)) == f);
    CHECK(parse_function("[0,0,1]") == EndoFunction{0, 0, 1});
    CHECK_THROWS_AS(parse_function(R"({"n":4,"f":[0,0,1]})"), std::invalid_argument);
    CHECK_THROWS_AS(parse_function("[0,0"), std::invalid_argument);
    CHECK_THROWS_AS(parse_function("[0,\"a\"]"), std::invalid_argument);
    CHECK_THROWS_AS(parse_function("[0,5]"), std::invalid_argument);
    CHECK(parse_permutation(R"({"sigma":[1,0]})") == Permutation{1, 0});
    CHECK(parse_labels("[2,0,1]").labels() == std::vector<int>{0, 1, 2});
}

TEST_CASE("enumerate")
{
    auto r = run({"enumerate", "trees", "--n", "4"});
    CHECK(r.code == 0);
    CHECK(json_lines(r.out).size() == 6);
    CHECK(r.err == "6 records\n");
    r = run({"enumerate", "trees", "--n", "1"});
    CHECK(json_lines(r.out).size() == 1);
    r = run({"enumerate", "forests", "--n", "3"});
    const auto records = json_lines(r.out);
    CHECK(records.size() == 6);
    CHECK(function_from_json(records.back()) == EndoFunction{0, 1, 2});
    r = run({"enumerate", "grl", "--f", "[0,0,0,0,0]"});
    CHECK(r.code == 0);
    CHECK(json_lines(r.out).size() == 2);
    CHECK(run({"enumerate", "trees", "--n", "0"}).code == 2);
    CHECK(run({"enumerate", "trees", "--n", "30"}).code == 2);
    CHECK(run({"enumerate", "shrubs", "--n", "3"}).code == 2);
    CHECK(run({"enumerate", "grl"}).code == 2);

    const auto path = temp_path("enum.jsonl");
    r = run({"enumerate", "trees", "--n", "5", "--output", path});
    CHECK(r.out == "24 records\n");
    CHECK(json_lines(slurp(path)).size() == 24);
    std::remove(path.c_str());
}

TEST_CASE("search")
{
    auto r = run({"search", "--f", "[0,0,0,0,3,3]"});
    CHECK(r.code == 0);
    auto rec = json::parse(r.out);
    CHECK(rec["labels"] == json::array({0, 1, 2, 3, 4, 5}));
    CHECK(is_graceful(EndoFunction{0, 0, 0, 0, 3, 3}, permutation_from_json(rec["witness"])));

    r = run({"search", "--f", "[0,0,1,2]", "--exhaustive"});
    CHECK(r.code == 0);
    CHECK(json::parse(r.out)["witness"] == json::array({0, 3, 1, 2}));

    r = run({"search", "--f", R"({"n":4,"f":[0,0,1,2]})", "--first"});
    CHECK(r.code == 0);

    r = run({"search", "--f", "[0,0,1,2]", "--sequence", "[0,0,0,0]"});
    CHECK(r.code == 1);
    CHECK(json::parse(r.out)["found"] == false);

    CHECK(run({"search", "--f", "[0,0,1,2]", "--sequence", "[0,1,1,2]"}).code == 0);
    CHECK(run({"search", "--f", "[0,0"}).code == 2);
    CHECK(run({"search", "--f", "[1,2,0]"}).code == 2);
    CHECK(run({"search"}).code == 2);
    CHECK(run({"search", "--f", "[0,0,1,2]", "--sequence", "[0,1]"}).code == 2);
}

TEST_CASE("verify")
{
    auto r = run({"verify", "glc", "--n", "6", "--jobs", "2"});
    CHECK(r.code == 0);
    const auto report = json::parse(r.out);
    CHECK(report["instances_checked"] == 120);
    CHECK(report["passed"] == true);
    CHECK(r.err.find("pass, 120 instances") != std::string::npos);

    r = run({"verify", "composition", "--n", "5", "--jobs", "3"});
    CHECK(r.code == 0);
    CHECK(json::parse(r.out)["instances_checked"] == 576);

    r = run({"verify", "lex", "--n", "6"});
    CHECK(r.code == 0);
    CHECK(json::parse(r.out)["instances_checked"] == 720 + 2);

    CHECK(run({"verify", "glc", "--n", "11"}).code == 2);
    CHECK(run({"verify", "nonsense"}).code == 2);
    CHECK(run({"verify", "strong-composition", "--n", "4", "--ell", "2"}).code == 2);
    CHECK(run({"verify", "glc", "--n", "5", "--n-max", "3"}).code == 2);
}

TEST_CASE("verify reports counterexamples with reproduction data")
{
    const auto path = temp_path("bounds.json");
    const auto r = run({"verify", "bounds", "--n", "2", "--n-max", "3", "--output", path});
    CHECK(r.code == 1);
    const auto report = json::parse(slurp(path));
    CHECK(report["passed"] == false);
    REQUIRE_FALSE(report["failures"].empty());
    const auto& first = report["failures"][0];
    CHECK(first.contains("f"));
    CHECK(first.contains("rho"));
    CHECK(first.contains("argmin"));
    CHECK(first.contains("claim"));
    std::remove(path.c_str());
}

TEST_CASE("witness lines")
{
    const auto path = temp_path("witness.jsonl");
    CHECK(run({"verify", "glc", "--n", "5", "--witnesses", path}).code == 0);
    const auto lines = json_lines(slurp(path));
    CHECK(lines.size() == 24);
    for (const auto& rec : lines) {
        CHECK(is_graceful(function_from_json(rec["f"]), permutation_from_json(rec["witness"])));
        CHECK(rec.contains("nodes_explored"));
    }
    std::remove(path.c_str());
}

TEST_CASE("reports round trip")
{
    VerifyOptions opt;
    opt.n_min = 2;
    opt.n_max = 3;
    const auto report = run_suite(Suite::bounds, opt);
    const auto j = report_json(report);
    const auto back = report_from_json(j);
    CHECK(report_json(back) == j);
    CHECK(back.failure_count == report.failure_count);
    CHECK(back.passed() == report.failures.empty());

    opt.n_min = 4;
    opt.n_max = 4;
    const auto ok = run_suite(Suite::center_sums, opt);
    CHECK(ok.passed());
    CHECK(ok.failures.empty());
    CHECK(report_json(report_from_json(report_json(ok))) == report_json(ok));
}

TEST_CASE("reports do not depend on the job count")
{
    for (Suite s : every_suite()) {
        VerifyOptions opt;
        opt.n_min = suite_limits(s).min_n;
        opt.n_max = std::min(suite_limits(s).default_n_max, 5);
        opt.jobs = 1;
        const auto one = report_json(run_suite(s, opt)).dump();
        opt.jobs = 5;
        CHECK(report_json(run_suite(s, opt)).dump() == one);
    }
}

TEST_CASE("expand and certify")
{
    auto r = run({"expand", "--f", "[0,0,1,2]", "--sigma", "[0,3,1,2]"});
    CHECK(r.code == 0);
    auto rec = json::parse(r.out);
    CHECK(rec["gamma"] == json::array({0, 2, 1, 3}));
    CHECK(rec["verified"] == true);
    CHECK(run({"expand", "--f", "[0,0,1,2]", "--sigma", "[0,3,1,2]", "--t", "1"}).code == 0);
    CHECK(run({"expand", "--f", "[0,0,1,2]"}).code == 0);
    CHECK(run({"expand", "--f", "[0,0,1,2]", "--sigma", "[0,1,2,3]"}).code == 1);
    CHECK(run({"expand", "--f", "[0,0,1,2]", "--sigma", "[0,1,2]"}).code == 2);

    r = run({"certify", "--f", "[0,0,0]"});
    CHECK(r.code == 0);
    rec = json::parse(r.out);
    CHECK(rec["center_sums"]["F"] == "576");
    CHECK(rec["center_sums"]["rhs"] == "576");

    r = run({"certify", "--f", "[0,0,0,0,0]", "--ell", "1"});
    CHECK(r.code == 0);
    CHECK(json::parse(r.out)["strong"]["certificate_f"] ==
          "997265048690366971231350763852012691907383446732800000000");
    CHECK(run({"certify", "--f", "[0,0,0]", "--ell", "1"}).code == 2);
    CHECK(run({"certify", "--f", "[1,0]"}).code == 2);
}

TEST_CASE("export")
{
    auto r = run({"export", "--f", "[0,0,0,0,3,3]", "--format", "dot"});
    CHECK(r.code == 0);
    CHECK(r.out.find("0 -> 0;") != std::string::npos);
    CHECK(std::count(r.out.begin(), r.out.end(), '>') == 6);
    r = run({"export", "--f", "[0]", "--format", "dot"});
    CHECK(r.out.find("0 -> 0;") != std::string::npos);
    r = run({"export", "--f", "[0]"});
    CHECK(json::parse(r.out) == json::parse(R"({"n":1,"f":[0]})"));
    CHECK(run({"export", "--f", "{bad"}).code == 2);
    CHECK(run({"export", "--f", "[0]", "--format", "svg"}).code == 2);
}

TEST_CASE("help exits cleanly")
{
    CHECK(run({"--help"}).code == 0);
    CHECK(run({}).code == 2);
}
