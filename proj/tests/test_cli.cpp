#include <catch2/catch_amalgamated.hpp>

#include <nlohmann/json.hpp>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>
#include <sys/wait.h>

namespace fs = std::filesystem;

namespace {

struct RunResult {
    int exit_code = -1;
    std::string output;
};

RunResult run_cli(const std::string& args) {
    std::string command = std::string(FIELDASYM_CLI_PATH) + " " + args + " 2>&1";
    FILE* pipe = popen(command.c_str(), "r");
    REQUIRE(pipe != nullptr);
    RunResult result;
    char buffer[4096];
    while (std::size_t n = std::fread(buffer, 1, sizeof buffer, pipe))
        result.output.append(buffer, n);
    int status = pclose(pipe);
    if (WIFEXITED(status)) result.exit_code = WEXITSTATUS(status);
    return result;
}

const fs::path& workspace() {
    static fs::path dir = [] {
        fs::path d = fs::temp_directory_path() / "fieldasym_cli_tests";
        fs::create_directories(d);
        return d;
    }();
    return dir;
}

fs::path write_config(const std::string& name, const std::string& text) {
    fs::path path = workspace() / name;
    std::ofstream out(path);
    out << text;
    return path;
}

fs::path dipole_config() {
    return write_config("dipole.json", R"({"charges": [
        {"a": "1", "x": "1", "y": "0"},
        {"a": "-1", "x": "-1", "y": "0"}]})");
}

fs::path triangle_config() {
    return write_config("triangle.json", R"({"charges": [
        {"a": "1", "x": "1", "y": "0"},
        {"a": "-2", "x": "-1/2", "y": "3/4"},
        {"a": "1", "x": "0", "y": "-1"}]})");
}

}  // namespace

TEST_CASE("cli spectrum prints the candidate directions and writes artifacts") {
    fs::path out = workspace() / "spectrum_out";
    RunResult r = run_cli("--out " + out.string() + " spectrum " + triangle_config().string());
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("order 1") != std::string::npos);
    CHECK(r.output.find("X/TypeI: 1 nonzero candidate slope(s), bound 3") != std::string::npos);
    CHECK(r.output.find("-0.236768389253") != std::string::npos);
    CHECK(r.output.find("0.654723699099") != std::string::npos);
    CHECK(r.output.find("0.473536778507") != std::string::npos);
    CHECK(r.output.find("-0.327361849550") != std::string::npos);

    CHECK(fs::exists(out / "triangle_spectrum.csv"));
    std::ifstream in(out / "triangle_spectrum.json");
    REQUIRE(in.good());
    nlohmann::json report = nlohmann::json::parse(in);
    CHECK(report.at("command") == "spectrum");
    CHECK(report.at("findings").is_array());
}

TEST_CASE("cli rejects missing or malformed input with the parse code") {
    RunResult missing = run_cli("spectrum " + (workspace() / "no_such.json").string());
    CHECK(missing.exit_code == 2);

    fs::path bad = write_config("broken.json", "{ \"charges\": [ oops");
    RunResult malformed = run_cli("spectrum " + bad.string());
    CHECK(malformed.exit_code == 2);
    CHECK(malformed.output.find("malformed JSON") != std::string::npos);
}

TEST_CASE("cli rejects degenerate configurations with the config code") {
    fs::path trivial = write_config("trivial.json",
                                    R"({"charges": [{"a": "0", "x": "0", "y": "0"}]})");
    RunResult r = run_cli("spectrum " + trivial.string());
    CHECK(r.exit_code == 3);
    CHECK(r.output.find("trivial field") != std::string::npos);
}

TEST_CASE("cli flag misuse exits with the usage code") {
    CHECK(run_cli("").exit_code == 4);
    CHECK(run_cli("--no-such-flag spectrum x.json").exit_code == 4);
    CHECK(run_cli("scan --trials 0").exit_code == 4);
    RunResult r = run_cli("trace " + dipole_config().string() + " --r-min 100 --r-max 10");
    CHECK(r.exit_code == 4);
}

TEST_CASE("cli product reports degrees and containment for the dipole") {
    fs::path out = workspace() / "product_out";
    RunResult r = run_cli("--out " + out.string() + " product " + dipole_config().string());
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("X: 50/50 sampled zeros") != std::string::npos);
    CHECK(r.output.find("degrees: measured (14, 14), quoted bound 6, factor degree sum 16") !=
          std::string::npos);
    CHECK(fs::exists(out / "dipole_product.json"));

    fs::path four = write_config("four.json", R"({"charges": [
        {"a": "1", "x": "0", "y": "0"}, {"a": "1", "x": "1", "y": "0"},
        {"a": "1", "x": "0", "y": "1"}, {"a": "1", "x": "1", "y": "1"}]})");
    CHECK(run_cli("product " + four.string()).exit_code == 4);
}

TEST_CASE("cli trace matches the dipole slopes against the exact candidates") {
    fs::path out = workspace() / "trace_out";
    RunResult r = run_cli("--out " + out.string() + " trace " + dipole_config().string() +
                          " --component X --domain I --angular 360 --rings 16");
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("X_TypeI: 4 branch(es), 4 matched estimate(s)") != std::string::npos);
    CHECK(r.output.find("~ candidate 0.707106781186") != std::string::npos);
    CHECK(r.output.find("~ candidate -0.707106781186") != std::string::npos);
    CHECK(fs::exists(out / "dipole_trace_X_TypeI.csv"));
    CHECK(fs::exists(out / "dipole_trace_X_TypeI.svg"));
    CHECK(fs::exists(out / "dipole_trace.json"));
}

TEST_CASE("cli scan output is a deterministic function of the seed") {
    std::string base = " scan --trials 30 --seed 5";
    RunResult a = run_cli("--out " + (workspace() / "scan_a").string() + base);
    RunResult b = run_cli("--out " + (workspace() / "scan_b").string() + base);
    CHECK(a.exit_code == 0);
    CHECK(a.output == b.output);
    CHECK(a.output.find("gamma layers checked: 30") != std::string::npos);

    RunResult c = run_cli("--out " + (workspace() / "scan_c").string() +
                          " scan --trials 30 --seed 6");
    CHECK(c.exit_code == 0);
    CHECK(c.output != a.output);
    CHECK(fs::exists(workspace() / "scan_a" / "scan_report.txt"));
    CHECK(fs::exists(workspace() / "scan_a" / "scan_report.json"));
}

TEST_CASE("cli verify passes clean and detects an injected fault") {
    fs::path out = workspace() / "verify_out";
    RunResult clean = run_cli("--out " + out.string() + " verify");
    CHECK(clean.exit_code == 0);
    CHECK(clean.output.find("all checks passed") != std::string::npos);
    CHECK(fs::exists(out / "kernels.csv"));
    CHECK(fs::exists(out / "verify_report.json"));

    RunResult faulty = run_cli("--out " + (workspace() / "verify_fault").string() +
                               " verify --inject-fault kernel-identity");
    CHECK(faulty.exit_code == 1);
    CHECK(faulty.output.find("check kernel-identity: FAILED") != std::string::npos);
    CHECK(faulty.output.find("verification FAILED") != std::string::npos);
}
