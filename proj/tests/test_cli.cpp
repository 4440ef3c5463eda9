#include <doctest.h>

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>

namespace {

const std::string kCli = ARGONAUT_CLI_PATH;
const std::string kDataDir = ARGONAUT_DATA_DIR;

struct RunResult {
    int exit_code = -1;
    std::string output;
};

RunResult run_cli(const std::string& args) {
    const std::string command = kCli + " " + args + " 2>&1";
    FILE* pipe = popen(command.c_str(), "r");
    REQUIRE(pipe);
    RunResult result;
    std::array<char, 4096> buffer{};
    while (fgets(buffer.data(), buffer.size(), pipe)) result.output += buffer.data();
    const int status = pclose(pipe);
    result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return result;
}

} // namespace

TEST_CASE("solve subcommand prints canonical extensions") {
    const auto preferred =
        run_cli("solve --af " + kDataDir + "/frameworks/af1.json --semantics preferred");
    CHECK_EQ(preferred.exit_code, 0);
    CHECK_EQ(preferred.output, "{a1,c1}\n{b1}\n");

    const auto complete =
        run_cli("solve --af " + kDataDir + "/frameworks/af2.json --semantics complete");
    CHECK_EQ(complete.exit_code, 0);
    CHECK_EQ(complete.output, "{}\n{a2,c2,e2}\n");

    const auto empty =
        run_cli("solve --af " + kDataDir + "/frameworks/empty.json --semantics grounded");
    CHECK_EQ(empty.exit_code, 0);
    CHECK_EQ(empty.output, "{}\n");
}

TEST_CASE("solve subcommand error handling") {
    const auto unknown =
        run_cli("solve --af " + kDataDir + "/frameworks/af1.json --semantics stable");
    CHECK_EQ(unknown.exit_code, 1);
    CHECK(unknown.output.find("unknown semantics") != std::string::npos);

    const auto missing = run_cli("solve --af /no/such/file.json --semantics grounded");
    CHECK_EQ(missing.exit_code, 1);
}

TEST_CASE("run subcommand executes scenarios with documented exit codes") {
    const auto basic = run_cli("run --scenario " + kDataDir + "/scenarios/basic.json");
    CHECK_EQ(basic.exit_code, 0);
    CHECK(basic.output.find("outcome: agreed") != std::string::npos);
    CHECK(basic.output.find("action: Show university ad") != std::string::npos);

    const auto cancelled = run_cli("run --scenario " + kDataDir +
                                   "/scenarios/argumentation.json --max-rounds 0");
    CHECK_EQ(cancelled.exit_code, 2);
    CHECK(cancelled.output.find("outcome: cancelled") != std::string::npos);
}

TEST_CASE("run subcommand semantics switch flips the example-2 outcome") {
    const auto ideal = run_cli("run --scenario " + kDataDir +
                               "/scenarios/example2_semantics.json --semantics maximal_ideal");
    CHECK_EQ(ideal.exit_code, 0);
    CHECK(ideal.output.find("action: Show steak ad") != std::string::npos);

    const auto grounded = run_cli("run --scenario " + kDataDir +
                                  "/scenarios/example2_semantics.json --semantics grounded");
    CHECK_EQ(grounded.exit_code, 0);
    CHECK(grounded.output.find("action: Show salad ad") != std::string::npos);
}

TEST_CASE("run subcommand usage and validation errors exit 1") {
    CHECK_EQ(run_cli("run").exit_code, 1);
    CHECK_EQ(run_cli("run --scenario /no/such/scenario.json").exit_code, 1);
    CHECK_EQ(run_cli("run --scenario " + kDataDir +
                     "/scenarios/basic.json --semantics bogus")
                 .exit_code,
             1);
}

TEST_CASE("run subcommand writes identical trace files across runs") {
    namespace fs = std::filesystem;
    const auto out1 = fs::temp_directory_path() / "argonaut_cli_trace1.jsonl";
    const auto out2 = fs::temp_directory_path() / "argonaut_cli_trace2.jsonl";
    const std::string base =
        "run --scenario " + kDataDir + "/scenarios/argumentation.json --out ";
    CHECK_EQ(run_cli(base + out1.string()).exit_code, 0);
    CHECK_EQ(run_cli(base + out2.string()).exit_code, 0);

    std::ifstream a(out1, std::ios::binary), b(out2, std::ios::binary);
    const std::string bytes_a{std::istreambuf_iterator<char>(a),
                              std::istreambuf_iterator<char>()};
    const std::string bytes_b{std::istreambuf_iterator<char>(b),
                              std::istreambuf_iterator<char>()};
    CHECK_FALSE(bytes_a.empty());
    CHECK_EQ(bytes_a, bytes_b);
    fs::remove(out1);
    fs::remove(out2);
}
