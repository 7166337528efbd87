#include <catch2/catch.hpp>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iterator>
#include <string>

namespace {

struct RunResult {
    int exit_code = -1;
    std::string output;
};

const char* cli_path() { return std::getenv("NCDIAG_CLI"); }

RunResult run_cli(const std::string& args) {
    RunResult res;
    const std::string cmd = std::string(cli_path()) + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    char buffer[4096];
    while (std::size_t got = std::fread(buffer, 1, sizeof buffer, pipe))
        res.output.append(buffer, got);
    const int status = pclose(pipe);
    res.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return res;
}

std::size_t count_lines(const std::string& text) {
    std::size_t n = 0;
    for (char c : text)
        if (c == '\n') ++n;
    return n;
}

}  // namespace

TEST_CASE("cli enumerate") {
    if (!cli_path()) return;  // only runs under ctest
    const auto res = run_cli("enumerate --s 5 --upper 0 --lower 4");
    CHECK(res.exit_code == 0);
    CHECK(count_lines(res.output) == 5);

    const auto empty = run_cli("enumerate --s 5 --upper 0 --lower 0");
    CHECK(count_lines(empty.output) == 1);

    const auto inf = run_cli("enumerate --s inf --upper 0 --lower 2");
    CHECK(count_lines(inf.output) == 1);
    CHECK(inf.output.find("\"colors\":\"bw\"") != std::string::npos);
}

TEST_CASE("cli exit codes") {
    if (!cli_path()) return;
    CHECK(run_cli("enumerate --s 0 --upper 0 --lower 2").exit_code == 2);
    CHECK(run_cli("nonsense").exit_code == 2);
    CHECK(run_cli("enumerate --s 5 --upper 9 --lower 9").exit_code == 3);

    // malformed measure file
    const std::string path = "/tmp/ncdiag_bad_measure.json";
    std::ofstream(path) << "{ not json";
    CHECK(run_cli("density --measure-file " + path + " --points 10").exit_code == 2);
    std::remove(path.c_str());
}

TEST_CASE("cli moments table") {
    if (!cli_path()) return;
    const auto res = run_cli("moments --s 5 --R 4");
    CHECK(res.exit_code == 0);
    CHECK(res.output == "r,kappa,moment\n1,0,0\n2,1,1\n3,0,0\n4,3,5\n");

    const auto inf7 = run_cli("cumulants --s inf --R 7");
    CHECK(inf7.output.find("7,0,0") != std::string::npos);

    const auto header_only = run_cli("moments --s 5 --R 0");
    CHECK(header_only.output == "r,kappa,moment\n");
}

TEST_CASE("cli gram") {
    if (!cli_path()) return;
    const auto res = run_cli("gram --s 1 --upper 0 --lower 2 --n 2");
    CHECK(res.exit_code == 0);
    CHECK(res.output.find("\"det\": \"128\"") != std::string::npos);
    CHECK(res.output.find("\"rank\": 3") != std::string::npos);

    const auto d5 = run_cli("gram --s 5 --upper 0 --lower 4 --n 2");
    CHECK(d5.output.find("\"rank\": 5") != std::string::npos);
}

TEST_CASE("cli determinism") {
    if (!cli_path()) return;
    const auto a = run_cli("sample --s 5 --N 40 --trials 2 --seed 7");
    const auto b = run_cli("sample --s 5 --N 40 --trials 2 --seed 7");
    CHECK(a.exit_code == 0);
    CHECK(a.output == b.output);
    CHECK(count_lines(a.output) == 81);  // header + N * trials

    const auto e1 = run_cli("enumerate --s 3 --upper 1 --lower 3");
    const auto e2 = run_cli("enumerate --s 3 --upper 1 --lower 3");
    CHECK(e1.output == e2.output);
}

TEST_CASE("cli bound override via environment") {
    if (!cli_path()) return;
    // lower the bound: a request fine under the default must now hit exit 3
    const std::string cmd = "NCDIAG_MAX_LEGS=4 " + std::string(cli_path()) +
                            " enumerate --s 5 --upper 0 --lower 6 2>/dev/null";
    const int status = std::system(cmd.c_str());
    CHECK(WEXITSTATUS(status) == 3);
}

TEST_CASE("cli --out writes the same bytes as stdout") {
    if (!cli_path()) return;
    const std::string path = "/tmp/ncdiag_out_test.csv";
    const auto direct = run_cli("moments --s 5 --R 6");
    const auto to_file = run_cli("moments --s 5 --R 6 --out " + path);
    CHECK(to_file.exit_code == 0);
    CHECK(to_file.output.empty());
    std::ifstream in(path);
    std::string contents((std::istreambuf_iterator<char>(in)),
                         std::istreambuf_iterator<char>());
    CHECK(contents == direct.output);
    std::remove(path.c_str());
}

TEST_CASE("cli closure with explicit generator file") {
    if (!cli_path()) return;
    const std::string path = "/tmp/ncdiag_generators.jsonl";
    std::ofstream gen(path);
    gen << R"({"upper":0,"lower":2,"blocks":[[1,2]],"colors":"bw"})" << "\n";
    gen << R"({"upper":0,"lower":3,"blocks":[[1,2,3]],"colors":"bbb"})" << "\n";
    gen << R"({"upper":2,"lower":2,"blocks":[[1,2,3,4]],"colors":"bwbw"})" << "\n";
    gen.close();
    const auto res = run_cli("closure --s 3 --max-legs 4 --generator-file " + path);
    CHECK(res.exit_code == 0);
    CHECK(res.output.find("\"all_match\": true") != std::string::npos);
    std::remove(path.c_str());
}

TEST_CASE("cli verify negative control") {
    if (!cli_path()) return;
    const auto ok = run_cli("verify --s-list 5 --R 6");
    CHECK(ok.exit_code == 0);
    CHECK(ok.output.find("\"pass\": true") != std::string::npos);

    const auto bad = run_cli("verify --s-list 5 --R 6 --perturb");
    CHECK(bad.exit_code == 1);
}

TEST_CASE("cli verify default run") {
    if (!cli_path()) return;
    const auto res = run_cli("verify");
    CHECK(res.exit_code == 0);
    CHECK(res.output.find("\"pass\": true") != std::string::npos);
    // all five default moduli are covered
    for (const char* s : {"\"3\"", "\"5\"", "\"6\"", "\"7\"", "\"inf\""})
        CHECK(res.output.find(s) != std::string::npos);
}
