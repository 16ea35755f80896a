#include <doctest.h>
#include <json.hpp>

#include <array>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

namespace {

struct RunResult {
    int exit_code = -1;
    std::string output;
};

RunResult run_cli(const std::string& args) {
    const std::string cmd = std::string(PELLAB_CLI_PATH) + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    RunResult r;
    std::array<char, 4096> buf{};
    std::size_t n = 0;
    while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) r.output.append(buf.data(), n);
    int status = pclose(pipe);
    r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

std::string read_golden(const std::string& name) {
    std::ifstream in(std::string(PELLAB_GOLDEN_DIR) + "/" + name, std::ios::binary);
    REQUIRE(in.good());
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

struct GoldenCase {
    std::string args;
    std::string golden;
    int exit_code;
};

}  // namespace

TEST_CASE("machine output matches the stored transcripts byte for byte") {
    const std::vector<GoldenCase> cases = {
        {"--json cf 21 --terms 6", "cf_21.json", 0},
        {"--json cf 4", "cf_4.json", 2},
        {"--json cf 414 --terms 4", "cf_414.json", 0},
        {"--json pell 21 --count 2", "pell_21.json", 0},
        {"--json pellgen 21 4 --count 2 --imprimitive --trivial", "pellgen_21_4.json", 0},
        {"--json pellgen 7 5", "pellgen_7_5.json", 1},
        {"--json ab 18 23 --count 1", "ab_18_23.json", 0},
        {"--json ab 16 19", "ab_16_19.json", 1},
        {"--json ab 18 24", "ab_18_24.json", 2},
        {"--json oracle ab 25 19 --bound 100", "oracle_ab_25_19.json", 0},
        {"--json oracle thue 6 5 3 --bound 1000", "oracle_thue_6_5_3.json", 0},
        {"--json oracle pellgen 21 -3 --bound 100", "oracle_pellgen_21_m3.json", 0},
    };
    for (const GoldenCase& c : cases) {
        CAPTURE(c.args);
        RunResult r = run_cli(c.args);
        CHECK(r.exit_code == c.exit_code);
        CHECK(r.output == read_golden(c.golden));
    }
}

TEST_CASE("machine output is versioned and round-trips losslessly") {
    for (const char* name :
         {"cf_21.json", "pell_21.json", "pellgen_21_4.json", "ab_18_23.json", "oracle_thue_6_5_3.json"}) {
        std::string text = read_golden(name);
        nlohmann::ordered_json doc = nlohmann::ordered_json::parse(text);
        CHECK(doc.at("schema_version").get<int>() == 1);
        CHECK(doc.dump(2) + "\n" == text);  // parse . dump is the identity on our output
    }
}

TEST_CASE("negative m spellings are equivalent") {
    RunResult bare = run_cli("--json pellgen 21 -3");
    RunResult keyed = run_cli("--json pellgen 21 m=-3");
    RunResult dashed = run_cli("--json pellgen 21 -- -3");
    CHECK(bare.exit_code == 0);
    CHECK(bare.output == keyed.output);
    CHECK(bare.output == dashed.output);
}

TEST_CASE("text mode mirrors the exit-code contract") {
    CHECK(run_cli("pell 21").exit_code == 0);
    CHECK(run_cli("pellgen 7 5").exit_code == 1);
    CHECK(run_cli("ab 16 19").exit_code == 1);
    CHECK(run_cli("cf 4").exit_code == 2);
    CHECK(run_cli("ab 18 24").exit_code == 2);
    CHECK(run_cli("").exit_code == 64);
    CHECK(run_cli("frobnicate").exit_code == 64);
    CHECK(run_cli("cf").exit_code == 64);
    CHECK(run_cli("cf twenty").exit_code == 64);
    CHECK(run_cli("oracle thue 6 5 2 --bound 10").exit_code == 64);  // n < 3
}

TEST_CASE("--neg solves the sign-flipped equation") {
    RunResult r = run_cli("--json ab 23 18 --neg --count 1");
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("\"x\": \"23\"") != std::string::npos);
    CHECK(r.output.find("\"y\": \"26\"") != std::string::npos);
}
