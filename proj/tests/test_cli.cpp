#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sys/wait.h>

#include <cstdio>
#include <fstream>
#include <string>

#include <nlohmann/json.hpp>

#include "ringlab/graph.hpp"

namespace {

struct RunResult {
    int status = -1;
    std::string output;  // stdout only
};

RunResult run_cli(const std::string& args, const std::string& env_prefix = "") {
    std::string cmd = env_prefix + " \"" + RINGLAB_CLI_PATH + "\" " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    RunResult r;
    char buf[4096];
    std::size_t n;
    while ((n = fread(buf, 1, sizeof buf, pipe)) > 0) r.output.append(buf, n);
    int rc = pclose(pipe);
    r.status = WIFEXITED(rc) ? WEXITSTATUS(rc) : -1;
    return r;
}

std::string data_path(const std::string& name) {
    return std::string(RINGLAB_DATA_DIR) + "/" + name;
}

}  // namespace

TEST_CASE("graph emits the compressed commuting graph") {
    RunResult r = run_cli("graph z:4 --format json");
    CHECK_EQ(r.status, 0);
    ringlab::CompressedGraph g = ringlab::parse_graph_json(r.output);
    CHECK_EQ(g.vertex_count(), 3);
    CHECK(ringlab::is_complete_with_loops(g));

    RunResult unital = run_cli("graph gf:2:6 --unital");
    CHECK_EQ(unital.status, 0);
    ringlab::CompressedGraph gu = ringlab::parse_graph_json(unital.output);
    CHECK_EQ(gu.vertex_count(), 4);
    CHECK(ringlab::is_complete_with_loops(gu));

    RunResult dot = run_cli("graph tri:gf:2:1:2 --format dot");
    CHECK_EQ(dot.status, 0);
    CHECK_EQ(dot.output.substr(0, 7), "graph G");
    std::size_t labels = 0;
    for (std::size_t at = dot.output.find("label="); at != std::string::npos;
         at = dot.output.find("label=", at + 1))
        ++labels;
    CHECK_EQ(labels, 8);  // the eight-vertex triangular example
}

TEST_CASE("identical invocations produce identical bytes") {
    RunResult a = run_cli("graph prod:z:2,gf:2:2 --unital");
    RunResult b = run_cli("graph prod:z:2,gf:2:2 --unital");
    CHECK_EQ(a.status, 0);
    CHECK_EQ(a.output, b.output);
}

TEST_CASE("usage and parse problems exit 2") {
    CHECK_EQ(run_cli("").status, 2);
    CHECK_EQ(run_cli("nosuchcommand").status, 2);
    CHECK_EQ(run_cli("graph").status, 2);
    CHECK_EQ(run_cli("graph nosuch:1").status, 2);
    CHECK_EQ(run_cli("graph z:4 --format svg").status, 2);
    CHECK_EQ(run_cli("verify --suite nosuch").status, 2);
    CHECK_EQ(run_cli("--config no_such.cfg graph z:4").status, 2);
}

TEST_CASE("budget refusals exit 3") {
    CHECK_EQ(run_cli("graph z:2000000").status, 3);
}

TEST_CASE("help exits 0") {
    CHECK_EQ(run_cli("--help").status, 0);
    CHECK_EQ(run_cli("graph --help").status, 0);
}

TEST_CASE("verify is deterministic for a fixed seed") {
    RunResult a = run_cli("verify --suite properties --seed 7");
    CHECK_EQ(a.status, 0);
    RunResult b = run_cli("verify --suite properties --seed 7");
    CHECK_EQ(a.output, b.output);

    nlohmann::json j = nlohmann::json::parse(a.output);
    CHECK_EQ(j["schema"], "ringlab.verify/1");
    CHECK_EQ(j["seed"], 7);
    CHECK_EQ(j["exit_code"], 0);
}

TEST_CASE("degree-0 witness bounds surface as exit 4 with unresolved items") {
    RunResult r = run_cli("verify --suite paper --deg 0");
    CHECK_EQ(r.status, 4);
    nlohmann::json j = nlohmann::json::parse(r.output);
    int unresolved = j["counts"]["unresolved"];
    CHECK(unresolved > 0);
    bool listed = false;
    for (const auto& item : j["items"])
        if (item["status"] == "unresolved") listed = true;
    CHECK(listed);
}

TEST_CASE("semidirect compresses the worked data files") {
    RunResult dp = run_cli("semidirect --data " + data_path("dp.json") + " --graph");
    CHECK_EQ(dp.status, 0);
    ringlab::CompressedGraph g = ringlab::parse_graph_json(dp.output);
    CHECK_EQ(g.vertex_count(), 3);
    CHECK(ringlab::is_complete_with_loops(g));

    RunResult zm = run_cli("semidirect --data " + data_path("zero_mult_3.json"));
    CHECK_EQ(zm.status, 0);
    nlohmann::json report = nlohmann::json::parse(zm.output);
    CHECK_EQ(report["merges"].size(), 2);
    CHECK_EQ(report["unresolved"].size(), 0);

    RunResult t2 = run_cli("semidirect --data " + data_path("t2_tight.json") +
                           " --graph --format dot");
    CHECK_EQ(t2.status, 0);
    CHECK_EQ(t2.output.substr(0, 7), "graph G");

    CHECK_EQ(run_cli("semidirect --data no_such.json --graph").status, 2);
}

TEST_CASE("semidirect exits 4 when merges stay unresolved") {
    RunResult r = run_cli("semidirect --data " + data_path("dp.json") + " --graph --deg 0");
    CHECK_EQ(r.status, 4);
    ringlab::CompressedGraph g = ringlab::parse_graph_json(r.output);
    CHECK_EQ(g.vertex_count(), 4);  // nothing merged
}

TEST_CASE("witness bounds come from flags, environment or config file, in that order") {
    std::string dp = data_path("dp.json");

    // environment alone forces the unresolved pair
    RunResult env = run_cli("semidirect --data " + dp + " --graph", "RINGLAB_MERGE_DEGREE=0");
    CHECK_EQ(env.status, 4);

    // an explicit flag overrides the environment
    RunResult flag = run_cli("semidirect --data " + dp + " --graph --deg 4 --coef 10",
                             "RINGLAB_MERGE_DEGREE=0");
    CHECK_EQ(flag.status, 0);

    // a config file is read first, the environment wins over it
    std::string path = "cli_test_config.cfg";
    {
        std::ofstream out(path);
        out << "merge_degree = 0\n";
    }
    RunResult file = run_cli("--config " + path + " semidirect --data " + dp + " --graph");
    CHECK_EQ(file.status, 4);
    RunResult file_env = run_cli("--config " + path + " semidirect --data " + dp + " --graph",
                                 "RINGLAB_MERGE_DEGREE=4");
    CHECK_EQ(file_env.status, 0);
    std::remove(path.c_str());

    // unknown keys in a config file are parse errors
    std::string bad = "cli_test_bad.cfg";
    {
        std::ofstream out(bad);
        out << "nosuch_key = 1\n";
    }
    CHECK_EQ(run_cli("--config " + bad + " graph z:4").status, 2);
    std::remove(bad.c_str());
}

TEST_CASE("integral prints the monic annihilator as CSV") {
    RunResult r = run_cli("integral --ring z:6 --element 3 --poly 0,3,1");
    CHECK_EQ(r.status, 0);
    std::string line = r.output;
    while (!line.empty() && (line.back() == '\n' || line.back() == '\r')) line.pop_back();
    CHECK_EQ(line.substr(line.rfind(',') + 1), "1");  // monic

    CHECK_EQ(run_cli("integral --ring z:6 --element 2 --poly 0,3,1").status, 2);
    CHECK_EQ(run_cli("integral --ring z:6 --element 3").status, 2);  // missing --poly
}

TEST_CASE("lattice prints a JSON summary") {
    RunResult r = run_cli("lattice gf:2:2");
    CHECK_EQ(r.status, 0);
    nlohmann::json j = nlohmann::json::parse(r.output);
    CHECK_EQ(j["count"], 2);
    CHECK_EQ(j["complete"], true);
    CHECK_EQ(j["subrings"].size(), 2);

    CHECK_EQ(run_cli("lattice zmul:4").status, 2);  // no identity
}
