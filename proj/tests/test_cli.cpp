// End-to-end checks through the installed binary; the harness passes its
// location in VPGMIS_CLI.
#include <doctest.h>

#include <json.hpp>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <string>

namespace {

struct RunResult {
    int exit_code = -1;
    std::string out;
};

std::string cli_path() {
    const char* env = std::getenv("VPGMIS_CLI");
    REQUIRE_MESSAGE(env != nullptr, "VPGMIS_CLI must point at the binary");
    return env;
}

RunResult run(const std::string& args) {
    const std::string command = cli_path() + " " + args + " 2>/dev/null";
    FILE* pipe = popen(command.c_str(), "r");
    REQUIRE(pipe != nullptr);
    RunResult result;
    char buffer[4096];
    size_t got;
    while ((got = fread(buffer, 1, sizeof buffer, pipe)) > 0)
        result.out.append(buffer, got);
    const int status = pclose(pipe);
    result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return result;
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path);
    REQUIRE(out.good());
    out << content;
}

const char* kValid = R"({
  "k": 1,
  "paths": [
    {"id": 0, "weight": 3, "vertices": [[0, 0], [2, 0], [2, 1]]},
    {"id": 1, "weight": 2, "vertices": [[1, 0], [1, 2]]}
  ]
})";

}  // namespace

TEST_CASE("validate accepts a good file with a summary line") {
    write_file("/tmp/cli_valid.json", kValid);
    const auto result = run("validate /tmp/cli_valid.json");
    CHECK(result.exit_code == 0);
    CHECK(result.out == "OK n=2 k=1 c=2 B=5\n");
}

TEST_CASE("validate reports violations and exits one") {
    write_file("/tmp/cli_diag.json", R"({
  "k": 1,
  "paths": [{"id": 3, "weight": 1, "vertices": [[0, 0], [1, 1]]}]
})");
    const auto result = run("validate /tmp/cli_diag.json");
    CHECK(result.exit_code == 1);
    CHECK(result.out == "path 3: DiagonalSegment at vertex 0\n");
}

TEST_CASE("validate exits two on malformed json") {
    write_file("/tmp/cli_broken.json", "{this is not json");
    CHECK(run("validate /tmp/cli_broken.json").exit_code == 2);
    CHECK(run("validate /tmp/cli_missing_file.json").exit_code == 2);
}

TEST_CASE("solve prints the report schema") {
    write_file("/tmp/cli_valid.json", kValid);
    const auto result = run("solve /tmp/cli_valid.json");
    REQUIRE(result.exit_code == 0);

    const auto doc = nlohmann::json::parse(result.out);
    CHECK(doc["selected"] == nlohmann::json::array({0}));
    CHECK(doc["weight"] == "3");
    CHECK(doc["lp_objective"] == "3");
    CHECK(doc["bound"] == 5);
    CHECK(doc["certified"] == true);
    CHECK(doc["pivot_rule"] == "min-id");
}

TEST_CASE("solve on disjoint paths selects everything at lp parity") {
    write_file("/tmp/cli_disjoint.json", R"({
  "k": 0,
  "paths": [
    {"id": 0, "weight": 1, "vertices": [[0, 0], [2, 0]]},
    {"id": 1, "weight": 2, "vertices": [[0, 2], [2, 2]]},
    {"id": 2, "weight": 3, "vertices": [[0, 4], [2, 4]]},
    {"id": 3, "weight": 4, "vertices": [[0, 6], [2, 6]]}
  ]
})");
    const auto result = run("solve /tmp/cli_disjoint.json");
    REQUIRE(result.exit_code == 0);
    const auto doc = nlohmann::json::parse(result.out);
    CHECK(doc["selected"] == nlohmann::json::array({0, 1, 2, 3}));
    CHECK(doc["weight"] == doc["lp_objective"]);  // ratio exactly 1
}

TEST_CASE("generated seed forty two instance stays within its bound") {
    const auto gen = run("gen --seed 42 --n 20 --k 1 --c 2 -o /tmp/cli_seed42.json");
    REQUIRE(gen.exit_code == 0);
    const auto result = run("solve /tmp/cli_seed42.json");
    REQUIRE(result.exit_code == 0);
    const auto doc = nlohmann::json::parse(result.out);
    REQUIRE(doc["certified"] == true);

    // ratio_lp = lp_objective / weight <= B = 5.
    const double objective = std::stod(doc["lp_objective"].get<std::string>());
    const double weight = std::stod(doc["weight"].get<std::string>());
    CHECK(objective / weight <= 5.0);
    CHECK(doc["bound"].get<int>() <= 5);
}

TEST_CASE("exact subcommand mirrors the schema with a null objective") {
    write_file("/tmp/cli_valid.json", kValid);
    const auto result = run("exact /tmp/cli_valid.json");
    REQUIRE(result.exit_code == 0);
    const auto doc = nlohmann::json::parse(result.out);
    CHECK(doc["selected"] == nlohmann::json::array({0}));
    CHECK(doc["weight"] == "3");
    CHECK(doc["lp_objective"].is_null());
    CHECK(doc["pivot_rule"] == "exact");
}

TEST_CASE("gen is deterministic across invocations") {
    const auto a = run("gen --seed 9 --n 12 --k 2 --c 3 --grid 20x20");
    const auto b = run("gen --seed 9 --n 12 --k 2 --c 3 --grid 20x20");
    REQUIRE(a.exit_code == 0);
    CHECK(a.out == b.out);
    const auto c = run("gen --seed 10 --n 12 --k 2 --c 3 --grid 20x20");
    CHECK(a.out != c.out);
}

TEST_CASE("float and exact arithmetic agree on the reported set") {
    run("gen --seed 5 --n 24 --k 1 --c 2 --grid 12x12 -o /tmp/cli_arith.json");
    const auto exact = run("solve /tmp/cli_arith.json --arith exact");
    const auto approx = run("solve /tmp/cli_arith.json --arith float");
    REQUIRE(exact.exit_code == 0);
    REQUIRE(approx.exit_code == 0);
    const auto de = nlohmann::json::parse(exact.out);
    const auto df = nlohmann::json::parse(approx.out);
    CHECK(de["selected"] == df["selected"]);
    CHECK(df["lp_objective"].is_number());
    CHECK(de["lp_objective"].is_string());
}

TEST_CASE("dump flags write side files") {
    write_file("/tmp/cli_valid.json", kValid);
    std::remove("/tmp/cli_lp.txt");
    std::remove("/tmp/cli_graph.txt");
    const auto result = run(
        "solve /tmp/cli_valid.json --lp-dump /tmp/cli_lp.txt --graph-dump /tmp/cli_graph.txt");
    REQUIRE(result.exit_code == 0);

    std::ifstream lp("/tmp/cli_lp.txt");
    std::string lp_text((std::istreambuf_iterator<char>(lp)),
                        std::istreambuf_iterator<char>());
    CHECK(lp_text.find("Maximize") != std::string::npos);
    CHECK(lp_text.find("x0 + x1 <= 1") != std::string::npos);

    std::ifstream graph("/tmp/cli_graph.txt");
    std::string graph_text((std::istreambuf_iterator<char>(graph)),
                           std::istreambuf_iterator<char>());
    CHECK(graph_text == "0 1\n");
}

TEST_CASE("render writes svg and rejects unknown highlights") {
    write_file("/tmp/cli_valid.json", kValid);
    const auto good = run("render /tmp/cli_valid.json -o /tmp/cli_out.svg --highlight 0");
    CHECK(good.exit_code == 0);
    std::ifstream svg("/tmp/cli_out.svg");
    std::string svg_text((std::istreambuf_iterator<char>(svg)),
                         std::istreambuf_iterator<char>());
    CHECK(svg_text.rfind("<svg", 0) == 0);

    const auto bad = run("render /tmp/cli_valid.json -o /tmp/cli_bad.svg --highlight 7");
    CHECK(bad.exit_code != 0);
}

TEST_CASE("bench emits the csv schema") {
    const auto result = run("bench --n 5 --k 0:1 --c 2 --seeds 1:2 --grid 12x12 --no-timing");
    REQUIRE(result.exit_code == 0);
    CHECK(result.out.rfind("seed,n,k,c,bound,lp_objective,alg_weight,exact_weight,"
                           "ratio_lp,ratio_opt,runtime_ms,error\n",
                           0) == 0);
    // Header plus 1*2*1*2 rows.
    size_t newlines = 0;
    for (char ch : result.out)
        if (ch == '\n') ++newlines;
    CHECK(newlines == 5);
}

TEST_CASE("solve validates before solving") {
    write_file("/tmp/cli_diag.json", R"({
  "k": 1,
  "paths": [{"id": 3, "weight": 1, "vertices": [[0, 0], [1, 1]]}]
})");
    const auto result = run("solve /tmp/cli_diag.json");
    CHECK(result.exit_code == 1);
    CHECK(result.out.find("DiagonalSegment") != std::string::npos);
}
