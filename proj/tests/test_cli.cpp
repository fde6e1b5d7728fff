#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "cli.hpp"
#include "einject/family.hpp"
#include "einject/graph_io.hpp"

using namespace einject;

namespace {

struct Run {
    int code;
    std::string out, err;
};

Run run(std::vector<std::string> args, const std::string& input = "") {
    std::istringstream in(input);
    std::ostringstream out, err;
    int code = run_cli(args, in, out, err);
    return {code, out.str(), err.str()};
}

std::string temp_file(const std::string& name, const std::string& body) {
    auto p = std::filesystem::temp_directory_path() / ("einject_test_" + name);
    std::ofstream(p) << body;
    return p.string();
}

}  // namespace

TEST_CASE("gen") {
    auto dot = run({"gen", "cycle:7", "--dot"});
    CHECK(dot.code == 0);
    CHECK(dot.out.find("graph") == 0);
    CHECK(dot.out.find("0 -- 6;") != std::string::npos);

    auto js = run({"gen", "cycle:7"});
    CHECK(js.code == 0);
    CHECK(graph_from_json(nlohmann::json::parse(js.out)) == generate(family::Cycle{7}));

    auto col = run({"gen", "path:3", "--col"});
    CHECK(col.out.find("p edge 3 2") != std::string::npos);
}

TEST_CASE("solve from stdin") {
    auto c7 = run({"gen", "cycle:7", "--json"});
    auto r = run({"solve", "-", "--mode", "einjective"}, c7.out);
    CHECK(r.code == 0);
    auto j = nlohmann::json::parse(r.out);
    CHECK(j["chi"] == 3);
    CHECK(j["exact"] == true);
    CHECK(r.err.find("elapsed") != std::string::npos);
    CHECK(r.out.find("elapsed") == std::string::npos);
}

TEST_CASE("output is stable across runs") {
    auto g = run({"gen", "torus:3x5"}).out;
    auto a = run({"solve", "-", "--workers", "2"}, g);
    auto b = run({"solve", "-", "--workers", "2"}, g);
    CHECK(a.out == b.out);
}

TEST_CASE("transform then solve proper equals solve einjective") {
    for (const char* spec : {"cycle:7", "wheel:5", "prism:5", "fan:2x3", "grid:3x3"}) {
        auto g = run({"gen", spec, "--json"}).out;
        auto s3 = run({"transform", "-", "s3", "--json"}, g).out;
        auto proper = nlohmann::json::parse(run({"solve", "-", "--mode", "proper"}, s3).out);
        auto direct = nlohmann::json::parse(run({"solve", "-", "--mode", "einjective"}, g).out);
        CHECK(proper["chi"] == direct["chi"]);
    }
}

TEST_CASE("verify") {
    auto g = temp_file("c6.json", run({"gen", "cycle:6"}).out);
    auto good = temp_file("good.json", "[1,2,1,2,1,2]");
    auto bad = temp_file("bad.json", "[1,1,1,1,1,1]");
    auto ok = run({"verify", g, good, "--mode", "einjective"});
    CHECK(ok.code == 0);
    CHECK(nlohmann::json::parse(ok.out)["valid"] == true);
    auto no = run({"verify", g, bad, "--mode", "einjective"});
    CHECK(no.code == 1);
    auto j = nlohmann::json::parse(no.out);
    CHECK(j["valid"] == false);
    CHECK(j["violations"][0]["witness"].size() == 4);
    CHECK(run({"verify", g, "-"}, "[1,2,1,2,1,2]").code == 0);
    CHECK(run({"verify", g, "-"}, "[1,2]").code == 2);
}

TEST_CASE("metrics") {
    auto r = run({"metrics", "-"}, run({"gen", "cycle:6"}).out);
    CHECK(r.code == 0);
    auto j = nlohmann::json::parse(r.out);
    CHECK(j["packing"]["value"] == 2);
    CHECK(j["two_distance_domination"]["value"] == 2);
}

TEST_CASE("check") {
    auto r = run({"check", "grid", "--m", "2..4", "--n", "2..4"});
    CHECK(r.code == 0);
    CHECK(r.out.find("pass 9,") != std::string::npos);

    auto js = run({"check", "cycle", "--n", "5..6", "--json"});
    CHECK(js.code == 0);
    std::istringstream lines(js.out);
    int count = 0;
    for (std::string line; std::getline(lines, line);) {
        auto j = nlohmann::json::parse(line);
        CHECK(j["status"] == "pass");
        ++count;
    }
    CHECK(count == 2);

    auto one = run({"check", "torus", "--spec", "torus:5x9", "--json"});
    CHECK(one.code == 1);
    CHECK(nlohmann::json::parse(one.out)["status"] == "fail");

    auto g1 = temp_file("p3.json", run({"gen", "path:3"}).out);
    auto g2 = temp_file("c4.json", run({"gen", "cycle:4"}).out);
    auto pair = run({"check", "join-formula", "--graphs", g1, g2, "--json"});
    CHECK(pair.code == 0);
    CHECK(nlohmann::json::parse(pair.out)["computed"] == 7);
}

TEST_CASE("export-cnf") {
    auto g = run({"gen", "complete:3"}).out;
    auto r = run({"export-cnf", "-", "--mode", "proper", "--k", "3"}, g);
    CHECK(r.code == 0);
    CHECK(r.out.find("p cnf 9 21") != std::string::npos);
}

TEST_CASE("usage errors exit 2") {
    CHECK(run({}).code == 2);
    CHECK(run({"frobnicate"}).code == 2);
    CHECK(run({"gen"}).code == 2);
    CHECK(run({"gen", "cycle:2"}).code == 2);
    CHECK(run({"gen", "cycle:7", "--dot", "--col"}).code == 2);
    CHECK(run({"solve", "/nonexistent.json"}).code == 2);
    CHECK(run({"solve", "-", "--mode", "weird"}, "{\"n\":1,\"edges\":[]}").code == 2);
    CHECK(run({"transform", "-", "cube"}, "{\"n\":1,\"edges\":[]}").code == 2);
    CHECK(run({"check", "bogus"}).code == 2);
    CHECK(run({"check", "grid", "--m", "5..2"}).code == 2);
    CHECK(run({"solve", "-"}, "garbage").code == 2);
    CHECK(run({"--help"}).code == 0);
}

TEST_CASE("budget flags beat the environment") {
    auto g = run({"gen", "torus:3x7"}).out;
    ::setenv("EINJECT_BUDGET_NODES", "1", 1);
    auto starved = nlohmann::json::parse(run({"solve", "-"}, g).out);
    auto freed = nlohmann::json::parse(run({"solve", "-", "--budget-nodes", "0", "--budget-ms", "0"}, g).out);
    ::unsetenv("EINJECT_BUDGET_NODES");
    CHECK(freed["chi"] == 11);
    if (starved["chi"].is_null()) CHECK(starved["exact"] == false);
    ::setenv("EINJECT_BUDGET_MS", "soon", 1);
    CHECK(run({"solve", "-"}, g).code == 2);
    ::unsetenv("EINJECT_BUDGET_MS");
}
