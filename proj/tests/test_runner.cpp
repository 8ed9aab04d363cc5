#include <catch2/catch.hpp>

#include <cstdio>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "chaindd/runner.hpp"

using namespace chaindd;

namespace {

struct RunResult {
    int exit_code;
    std::string out;
    std::string err;
};

RunResult run_spec(RunSpec spec) {
    std::ostringstream out, err;
    int rc = run(spec, out, err);
    return {rc, out.str(), err.str()};
}

std::vector<nlohmann::json> json_lines(const std::string& text) {
    std::vector<nlohmann::json> out;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line))
        if (!line.empty() && line.front() == '{') out.push_back(nlohmann::json::parse(line));
    return out;
}

}  // namespace

TEST_CASE("queens run reports the solution count") {
    RunSpec spec;
    spec.subcommand = "queens";
    spec.n = 8;
    spec.kind = "czdd";
    spec.encoding = "one-hot";
    spec.order = "top-down";
    auto r = run_spec(spec);
    REQUIRE(r.exit_code == kExitOk);
    auto reports = json_lines(r.out);
    REQUIRE(reports.size() == 1);
    CHECK(reports[0]["benchmark"] == "queens");
    CHECK(reports[0]["kind"] == "czdd");
    CHECK(reports[0]["solutions"] == "92");
    CHECK(reports[0]["final_nodes"].get<std::uint64_t>() > 0);
}

TEST_CASE("worstcase run reproduces the closed-form size") {
    RunSpec spec;
    spec.subcommand = "worstcase";
    spec.family = "zdd-vs-cbdd";
    spec.k = 3;
    spec.kind = "cbdd";
    auto r = run_spec(spec);
    REQUIRE(r.exit_code == kExitOk);
    auto reports = json_lines(r.out);
    REQUIRE(reports.size() == 1);
    CHECK(reports[0]["final_nodes"] == 20);
}

TEST_CASE("missing dictionary input fails with a diagnostic") {
    RunSpec spec;
    spec.subcommand = "dict";
    spec.input = "missing.txt";
    auto r = run_spec(spec);
    CHECK(r.exit_code == kExitBadInput);
    CHECK(r.err.find("missing.txt") != std::string::npos);
}

TEST_CASE("netlist parse errors carry a line number and exit distinctly") {
    const char* path = "runner_bad_netlist.tmp";
    {
        std::ofstream f(path);
        f << "INPUT(a)\nOUTPUT(z)\nz = AND(a, ghost)\n";
    }
    RunSpec spec;
    spec.subcommand = "circuit";
    spec.input = path;
    auto r = run_spec(spec);
    CHECK(r.exit_code == kExitBadInput);
    CHECK(r.err.find("line 3") != std::string::npos);
    std::remove(path);
}

TEST_CASE("reports are deterministic modulo wall_seconds") {
    RunSpec spec;
    spec.subcommand = "dict";
    spec.input = "synthetic:200:9";
    spec.kind = "all";
    auto a = run_spec(spec);
    auto b = run_spec(spec);
    REQUIRE(a.exit_code == kExitOk);
    auto ra = json_lines(a.out), rb = json_lines(b.out);
    REQUIRE(ra.size() == 4);
    REQUIRE(rb.size() == 4);
    for (std::size_t i = 0; i < ra.size(); ++i) {
        ra[i].erase("wall_seconds");
        rb[i].erase("wall_seconds");
        CHECK(ra[i] == rb[i]);
    }
}

TEST_CASE("kind=all emits one record per kind plus the ratio table") {
    RunSpec spec;
    spec.subcommand = "worstcase";
    spec.family = "bdd-vs-czdd";
    spec.k = 2;
    spec.kind = "all";
    auto r = run_spec(spec);
    REQUIRE(r.exit_code == kExitOk);
    auto reports = json_lines(r.out);
    REQUIRE(reports.size() == 4);
    CHECK(reports[0]["kind"] == "bdd");
    CHECK(reports[1]["kind"] == "cbdd");
    CHECK(reports[2]["kind"] == "zdd");
    CHECK(reports[3]["kind"] == "czdd");
    CHECK(r.err.find("BDD:CBDD") != std::string::npos);
}

TEST_CASE("csv output uses the fixed schema") {
    RunSpec spec;
    spec.subcommand = "queens";
    spec.n = 4;
    spec.kind = "bdd";
    spec.format = "csv";
    auto r = run_spec(spec);
    REQUIRE(r.exit_code == kExitOk);
    std::istringstream in(r.out);
    std::string header;
    std::getline(in, header);
    CHECK(header ==
          "benchmark,kind,encoding,ordering,final_nodes,peak_nodes,cache_lookups,wall_seconds");
    std::string row;
    std::getline(in, row);
    CHECK(row.rfind("queens,bdd,one-hot,top-down,", 0) == 0);
}

TEST_CASE("reports can be written to a file") {
    const char* path = "runner_report.tmp";
    RunSpec spec;
    spec.subcommand = "worstcase";
    spec.k = 1;
    spec.kind = "zdd";
    spec.output = path;
    auto r = run_spec(spec);
    REQUIRE(r.exit_code == kExitOk);
    std::ifstream f(path);
    std::string line;
    std::getline(f, line);
    CHECK(nlohmann::json::parse(line)["final_nodes"] == 5);
    std::remove(path);
}

TEST_CASE("selftest subcommand succeeds") {
    RunSpec spec;
    spec.subcommand = "selftest";
    auto r = run_spec(spec);
    CHECK(r.exit_code == kExitOk);
    CHECK(r.out.find("selftest passed") != std::string::npos);
}
