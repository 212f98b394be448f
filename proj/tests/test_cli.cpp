// End-to-end checks of the command-line front door. The binary path is the
// test's first argument.

#define DOCTEST_CONFIG_IMPLEMENT
#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "ramgate/config.hpp"
#include "ramgate/report.hpp"

namespace {

std::string g_binary;

namespace fs = std::filesystem;

struct TempDir {
    fs::path path;
    TempDir() {
        path = fs::temp_directory_path() /
               ("ramgate_cli_test_" + std::to_string(std::rand()));
        fs::create_directories(path);
    }
    ~TempDir() {
        std::error_code ec;
        fs::remove_all(path, ec);
    }
};

int run_raw(const std::string& command) {
    const int status = std::system(command.c_str());
    return WEXITSTATUS(status);
}

int run_command(const std::string& args) { return run_raw(g_binary + " " + args); }

std::string read_file(const fs::path& path) {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

void write_file(const fs::path& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    out << content;
}

}  // namespace

TEST_CASE("run: default config emits metrics with a zero gate IER") {
    TempDir dir;
    const auto config = dir.path / "scenario.json";
    write_file(config, ramgate::default_scenario_json());

    const int code = run_command("run --config " + config.string() + " --out-dir " +
                                 dir.path.string() + " --quiet");
    CHECK(code == 0);
    const auto metrics = read_file(dir.path / "metrics.json");
    CHECK(metrics.find("\"ram\"") != std::string::npos);
    CHECK(metrics.find("\"ier\": \"0.000000\"") != std::string::npos);
}

TEST_CASE("run: malformed or missing config exits 2") {
    TempDir dir;
    const auto config = dir.path / "broken.json";
    write_file(config, "{broken");
    CHECK(run_command("run --config " + config.string() + " --quiet") == 2);
    CHECK(run_command("run --config " + (dir.path / "absent.json").string() +
                      " --quiet") == 2);
    CHECK(run_command("definitely-not-a-command") == 2);
}

TEST_CASE("run: --emit-steps writes one row per step") {
    TempDir dir;
    const auto config = dir.path / "scenario.json";
    auto json = ramgate::parse_scenario_config(ramgate::default_scenario_json());
    write_file(config, ramgate::default_scenario_json());

    const int code = run_command("run --config " + config.string() + " --out-dir " +
                                 dir.path.string() + " --emit-steps --quiet");
    CHECK(code == 0);
    const auto csv = read_file(dir.path / "steps.csv");
    long rows = -1;  // header
    for (char c : csv) {
        if (c == '\n') ++rows;
    }
    CHECK(rows == json.steps);
}

TEST_CASE("sweep: re-running with the same seed is byte-identical") {
    TempDir dir;
    const auto config = dir.path / "scenario.json";
    auto scenario = ramgate::default_scenario_json();
    // Smaller N keeps the smoke test fast; determinism is N-independent.
    scenario.replace(scenario.find("\"steps\": 10000"), 14, "\"steps\": 2000");
    write_file(config, scenario);

    const auto out_a = dir.path / "a";
    const auto out_b = dir.path / "b";
    fs::create_directories(out_a);
    fs::create_directories(out_b);
    CHECK(run_command("sweep --config " + config.string() + " --out-dir " +
                      out_a.string() + " --quiet") == 0);
    CHECK(run_command("sweep --config " + config.string() + " --out-dir " +
                      out_b.string() + " --quiet --parallel") == 0);

    const auto csv_a = read_file(out_a / "sweep.csv");
    CHECK_FALSE(csv_a.empty());
    CHECK(csv_a == read_file(out_b / "sweep.csv"));
    CHECK(read_file(out_a / "sweep.svg").find("ier_ram") != std::string::npos);
}

TEST_CASE("seed priority: flag over config over environment") {
    TempDir dir;
    const auto config = dir.path / "scenario.json";
    auto scenario = ramgate::default_scenario_json();
    scenario.replace(scenario.find("\"steps\": 10000"), 14, "\"steps\": 500");
    write_file(config, scenario);

    CHECK(run_command("run --config " + config.string() + " --out-dir " +
                      dir.path.string() + " --seed 7 --quiet") == 0);
    CHECK(read_file(dir.path / "metrics.json").find("\"seed\": 7") !=
          std::string::npos);

    // Without the flag the config's seed (42) wins over the environment.
    CHECK(run_raw("RAMGATE_SEED=99 " + g_binary + " run --config " +
                  config.string() + " --out-dir " + dir.path.string() +
                  " --quiet") == 0);
    CHECK(read_file(dir.path / "metrics.json").find("\"seed\": 42") !=
          std::string::npos);
}

TEST_CASE("case-study, witness and necessity-scan commands") {
    TempDir dir;
    CHECK(run_command("case-study --out-dir " + dir.path.string() + " --quiet") == 0);
    CHECK(read_file(dir.path / "case_study.json").find("Yes (in many cases)") !=
          std::string::npos);

    const auto instance = dir.path / "instance.json";
    write_file(instance, R"({
        "universe": ["a", "b", "c"],
        "visible": ["a"],
        "requires": ["a", "c"]
    })");
    CHECK(run_command("witness --instance " + instance.string() + " --out-dir " +
                      dir.path.string() + " --quiet") == 0);
    CHECK(read_file(dir.path / "witness.json").find("witness found") !=
          std::string::npos);

    // Gap-free instance: "no witness" is still exit 0.
    const auto gap_free = dir.path / "gap_free.json";
    write_file(gap_free, R"({
        "universe": ["a", "b"],
        "visible": ["a", "b"],
        "requires": ["a", "b"]
    })");
    CHECK(run_command("witness --instance " + gap_free.string() + " --out-dir " +
                      dir.path.string() + " --quiet") == 0);
    CHECK(read_file(dir.path / "witness.json").find("no witness") != std::string::npos);

    CHECK(run_command("necessity-scan --instance " + instance.string() + " --out-dir " +
                      dir.path.string() + " --quiet") == 0);
    CHECK(read_file(dir.path / "necessity.json")
              .find("\"ram_invalid_executions\": 0") != std::string::npos);
}

int main(int argc, char** argv) {
    if (argc < 2) {
        std::fprintf(stderr, "usage: test_cli <ramgate-binary>\n");
        return 1;
    }
    g_binary = argv[1];
    doctest::Context context;
    context.applyCommandLine(1, argv);
    return context.run();
}
