#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "balanced/cli.hpp"

using nlohmann::json;

namespace {

struct CliResult {
    int code;
    std::string out;
    std::string err;
};

CliResult run_cli(std::vector<std::string> args) {
    std::ostringstream out, err;
    int code = balanced::cli::run(std::move(args), out, err);
    return {code, out.str(), err.str()};
}

struct TempFile {
    std::string path;
    TempFile(const std::string& name, const std::string& content)
        : path("cli_test_" + name) {
        std::ofstream f(path, std::ios::binary);
        f << content;
    }
    ~TempFile() { std::remove(path.c_str()); }
};

} // namespace

TEST_CASE("check subcommand") {
    auto res = run_cli({"check", "--gen", "path --n 4", "--measure",
                        R"(["1/2","0","0","1/2"])"});
    REQUIRE(res.code == 0);
    json j = json::parse(res.out);
    CHECK(j["balanced"] == true);
    CHECK(j["max_cost"] == "3/2");

    auto bad = run_cli({"check", "--gen", "path --n 4", "--measure", R"(["1","0","0","0"])"});
    REQUIRE(bad.code == 0);
    json jb = json::parse(bad.out);
    CHECK(jb["balanced"] == false);
    CHECK(jb.contains("violations"));

    auto costs = run_cli({"check", "--gen", "cycle --n 4", "--measure",
                          R"(["1/2","0","1/2","0"])", "--costs"});
    REQUIRE(costs.code == 0);
    CHECK(json::parse(costs.out)["costs"] == json::parse(R"(["1","1","1","1"])"));
}

TEST_CASE("gen subcommand emits graphs in several formats") {
    auto res = run_cli({"gen", "cycle", "--n", "4"});
    REQUIRE(res.code == 0);
    json j = json::parse(res.out);
    CHECK(j["n"] == 4);
    CHECK(j["edges"].size() == 4);

    auto dot = run_cli({"gen", "path", "--n", "3", "--format", "dot"});
    REQUIRE(dot.code == 0);
    CHECK(dot.out.find("graph G {") != std::string::npos);

    auto edges = run_cli({"gen", "complete", "--n", "3", "--format", "edgelist"});
    REQUIRE(edges.code == 0);
    CHECK(edges.out.substr(0, 2) == "3\n");

    auto fam = run_cli({"gen", "join-family", "--l", "0", "--k", "2"});
    REQUIRE(fam.code == 0);
    CHECK(json::parse(fam.out)["n"] == 6);

    auto ex14 = run_cli({"gen", "example14"});
    REQUIRE(ex14.code == 0);
    CHECK(json::parse(ex14.out)["n"] == 14);

    auto bad = run_cli({"gen", "heptagram", "--n", "7"});
    CHECK(bad.code == 1);
    CHECK(json::parse(bad.out)["error"] == "unknown_family");
}

TEST_CASE("gen with file inputs") {
    TempFile left("left.json", R"({"n":3,"edges":[]})");
    TempFile right("right.json", R"({"n":3,"edges":[]})");
    auto res = run_cli({"gen", "join", "--left", left.path, "--right", right.path});
    REQUIRE(res.code == 0);
    json j = json::parse(res.out);
    CHECK(j["n"] == 6);
    CHECK(j["edges"].size() == 9);

    TempFile c4("c4.json", R"({"n":4,"edges":[[0,1],[1,2],[2,3],[3,0]]})");
    auto prod = run_cli({"gen", "product", "--left", c4.path, "--right", c4.path});
    REQUIRE(prod.code == 0);
    CHECK(json::parse(prod.out)["n"] == 16);

    auto comp = run_cli({"gen", "complement", "--input", c4.path});
    REQUIRE(comp.code == 0);
    json jc = json::parse(comp.out);
    CHECK(jc["n"] == 4);
    CHECK(jc["edges"] == json::parse("[[0,2],[1,3]]"));

    TempFile p3("p3.json", R"({"n":3,"edges":[[0,1],[1,2]]})");
    auto gh = run_cli({"gen", "gh", "--input", p3.path});
    REQUIRE(gh.code == 0);
    CHECK(json::parse(gh.out)["n"] == 9);

    auto missing = run_cli({"gen", "join", "--left", "no_such_file_here.json",
                            "--right", c4.path});
    CHECK(missing.code == 1);
    CHECK(json::parse(missing.out)["error"] == "parse_error");
}

TEST_CASE("pretty format is indented JSON") {
    auto res = run_cli({"check", "--gen", "path --n 2", "--measure", R"(["1/2","1/2"])",
                        "--format", "pretty"});
    REQUIRE(res.code == 0);
    CHECK(res.out.find("\n  \"balanced\"") != std::string::npos);
    CHECK(json::parse(res.out)["balanced"] == true);
}

TEST_CASE("distances of the shipped 14-vertex example match its fixture") {
    auto res = run_cli({"distances", "--gen", "example14", "--format", "csv"});
    REQUIRE(res.code == 0);
    std::ifstream f(std::string(BALANCED_DATA_DIR) + "/example14_distances.csv",
                    std::ios::binary);
    REQUIRE(f.good());
    std::ostringstream ss;
    ss << f.rdbuf();
    CHECK(res.out == ss.str());
}

TEST_CASE("distances subcommand") {
    auto res = run_cli({"distances", "--gen", "path --n 3", "--format", "csv"});
    REQUIRE(res.code == 0);
    CHECK(res.out == "0,1,2\n1,0,1\n2,1,0\n");

    auto j = run_cli({"distances", "--gen", "path --n 3"});
    REQUIRE(j.code == 0);
    CHECK(json::parse(j.out)["distances"][0][2] == 2);
}

TEST_CASE("energy and greedy subcommands") {
    auto e = run_cli({"energy", "--gen", "cycle --n 4", "--measure",
                      R"(["1/2","0","1/2","0"])"});
    REQUIRE(e.code == 0);
    CHECK(json::parse(e.out)["energy"] == "1");

    auto g = run_cli({"greedy", "--gen", "path --n 4", "--seed", "0", "--steps", "5",
                      "--eps", "1/2"});
    REQUIRE(g.code == 0);
    json jg = json::parse(g.out);
    CHECK(jg["picks"].size() == 5);
    CHECK(jg["picks"][0] == 3);
    CHECK(jg.contains("eps_balanced"));
}

TEST_CASE("enumerate subcommand") {
    auto res = run_cli({"enumerate", "--gen", "join-family --l 0 --k 2"});
    REQUIRE(res.code == 0);
    json j = json::parse(res.out);
    CHECK(j["count"] == 3);
    CHECK(j["basics"].size() == 3);

    auto dot = run_cli({"enumerate", "--gen", "cycle --n 8", "--format", "dot"});
    REQUIRE(dot.code == 0);
    CHECK(dot.out.find("graph compatibility {") != std::string::npos);

    auto capped = run_cli({"enumerate", "--gen", "path --n 6", "--max-n", "4"});
    CHECK(capped.code == 1);
    CHECK(json::parse(capped.out)["error"] == "too_large");

    TempFile c6("c6.json", R"({"n":6,"edges":[[0,1],[1,2],[2,3],[3,4],[4,5],[5,0]]})");
    auto from_file = run_cli({"enumerate", "--graph", c6.path});
    REQUIRE(from_file.code == 0);
    CHECK(json::parse(from_file.out)["count"] == 3);
}

TEST_CASE("compat subcommand") {
    auto res = run_cli({"compat", "--gen", "cycle --n 8", "--cliques", "3"});
    REQUIRE(res.code == 0);
    json j = json::parse(res.out);
    CHECK(j["components"] == 1);
    CHECK(j["count"].get<int>() >= 4);
    CHECK(!j["cliques"].empty());
}

TEST_CASE("decompose subcommand") {
    auto res = run_cli({"decompose", "--gen", "cycle --n 4", "--measure",
                        R"(["1/4","1/4","1/4","1/4"])"});
    REQUIRE(res.code == 0);
    json j = json::parse(res.out);
    CHECK(j["verified"] == true);
    CHECK(j["parts"].size() == 2);
    CHECK(j["chain_length"] == 1);
    CHECK(j["parts"][0]["coeff"] == "1/2");
}

TEST_CASE("extrapolate subcommand") {
    auto res = run_cli({"extrapolate", "--gen", "cycle --n 4", "--mu",
                        R"(["1/2","0","1/2","0"])", "--nu",
                        R"(["1/4","1/4","1/4","1/4"])"});
    REQUIRE(res.code == 0);
    json j = json::parse(res.out);
    CHECK(j["R"] == "2");
    CHECK(j["L"] == "0");
    CHECK(j["lambda_R"] == json::parse(R"(["0","1/2","0","1/2"])"));
    CHECK(j["binding"][0]["kind"] == "support");
}

TEST_CASE("hull subcommand") {
    auto res = run_cli({"hull", "--gen", "cycle --n 4", "--measure",
                        R"(["1/4","1/4","1/4","1/4"])", "--basics",
                        R"([["1/2","0","1/2","0"],["0","1/2","0","1/2"]])"});
    REQUIRE(res.code == 0);
    json j = json::parse(res.out);
    CHECK(j["inside"] == true);
    CHECK(j["coefficients"] == json::parse(R"(["1/2","1/2"])"));

    auto outside = run_cli({"hull", "--gen", "cycle --n 8", "--measure",
                            R"(["0","1/2","0","0","0","1/2","0","0"])", "--basics",
                            R"([["1/2","0","0","0","1/2","0","0","0"]])"});
    REQUIRE(outside.code == 0);
    json jo = json::parse(outside.out);
    CHECK(jo["inside"] == false);
    CHECK(jo.contains("certificate"));
}

TEST_CASE("error handling and exit codes") {
    // domain error: malformed measure
    auto dom = run_cli({"check", "--gen", "path --n 4", "--measure", R"(["1/2","x"])"});
    CHECK(dom.code == 1);
    CHECK(json::parse(dom.out).contains("error"));

    // domain error: disconnected input graph
    TempFile disc("disc.json", R"({"n":3,"edges":[[0,1]]})");
    auto res = run_cli({"distances", "--graph", disc.path});
    CHECK(res.code == 1);
    CHECK(json::parse(res.out)["error"] == "disconnected");

    // usage error: unknown subcommand
    auto usage = run_cli({"frobnicate"});
    CHECK(usage.code == 2);

    // usage error: missing required option
    auto missing = run_cli({"check", "--gen", "path --n 4"});
    CHECK(missing.code == 2);

    // missing graph source
    auto nograph = run_cli({"check", "--measure", R"(["1"])"});
    CHECK(nograph.code == 1);
    CHECK(json::parse(nograph.out)["error"] == "bad_parameter");
}

TEST_CASE("output determinism") {
    std::vector<std::string> args{"enumerate", "--gen", "cycle --n 8"};
    auto a = run_cli(args);
    auto b = run_cli(args);
    CHECK(a.code == 0);
    CHECK(a.out == b.out);
}

TEST_CASE("out file option") {
    TempFile sink("sink.json", "");
    auto res = run_cli({"check", "--gen", "path --n 2", "--measure", R"(["1/2","1/2"])",
                        "--out", sink.path});
    REQUIRE(res.code == 0);
    CHECK(res.out.empty());
    std::ifstream f(sink.path);
    json j = json::parse(f);
    CHECK(j["balanced"] == true);
}

TEST_CASE("verify subcommand runs the example suite") {
    auto res = run_cli({"verify"});
    CHECK(res.code == 0);
    CHECK(res.out.find("PASS path-endpoint-measure-unique") != std::string::npos);
    CHECK(res.out.find("FAIL") == std::string::npos);

    auto alias = run_cli({"verify-paper"});
    CHECK(alias.code == 0);
}
