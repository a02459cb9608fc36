#include <gtest/gtest.h>

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <fstream>
#include <string>

#include <json.hpp>

#ifndef HYBRIDSEQ_CLI_PATH
#error "HYBRIDSEQ_CLI_PATH must name the hybridseq executable"
#endif

namespace {

struct Run {
    int code;
    std::string out;
};

// stdout only; stderr is merged when asked.
Run run(const std::string& args, bool merge_stderr = false) {
    std::string cmd = std::string(HYBRIDSEQ_CLI_PATH) + " " + args + (merge_stderr ? " 2>&1" : " 2>/dev/null");
    FILE* pipe = popen(cmd.c_str(), "r");
    if (!pipe) return {-1, ""};
    std::string out;
    std::array<char, 4096> buf{};
    while (std::size_t n = fread(buf.data(), 1, buf.size(), pipe)) out.append(buf.data(), n);
    int status = pclose(pipe);
    return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

std::string write_temp(const std::string& name, const std::string& text) {
    std::string path = ::testing::TempDir() + name;
    std::ofstream(path) << text;
    return path;
}

}  // namespace

TEST(Cli, FibonacciHybridTerms) {
    auto r = run("term --family fibonacci --from 0 --to 5 --hybrid");
    EXPECT_EQ(r.code, 0);
    auto first = nlohmann::json::parse(r.out.substr(0, r.out.find('\n')));
    EXPECT_EQ(first["n"], 0);
    EXPECT_EQ(first["re"], "0");
    EXPECT_EQ(first["i"], "1");
    EXPECT_EQ(first["eps"], "1");
    EXPECT_EQ(first["h"], "2");
    EXPECT_EQ(first["character"], "-5");
}

TEST(Cli, ExplicitParameters) {
    auto r = run("term --a 2 --b 3 --c 1 --w0 0 --w1 1 --n 6");
    EXPECT_EQ(r.code, 0);
    EXPECT_EQ(r.out, "{\"n\":6,\"w\":\"126\"}\n");
    auto csv = run("term --a 2 --b 3 --c 1 --w0 0 --w1 1 --n 6 --format csv");
    EXPECT_EQ(csv.out, "n,w\n6,126\n");
}

TEST(Cli, BinetCrossCheck) {
    auto r = run("hybrid --a 5/2 --b -1 --c 3/2 --w0 2 --w1 -1 --from 0 --to 12 --binet");
    EXPECT_EQ(r.code, 0);
    EXPECT_EQ(run("term --a 1 --b 1 --c -1/4 --w0 0 --w1 1 --n 3").code, 0);
    EXPECT_EQ(run("term --a 1 --b 1 --c -1/4 --w0 0 --w1 1 --n 3 --binet").code, 2);
}

TEST(Cli, UsageErrors) {
    EXPECT_EQ(run("term --a 1 --b 1 --c 0 --w0 0 --w1 1 --n 3").code, 2);
    EXPECT_EQ(run("term --family fibonacci").code, 2);
    EXPECT_EQ(run("term --family nope --n 1").code, 2);
    EXPECT_EQ(run("term --family fibonacci --n 1 --format xml").code, 2);
    EXPECT_EQ(run("").code, 2);
    EXPECT_EQ(run("verify --config /nonexistent/config.json").code, 2);
}

TEST(Cli, FamiliesListing) {
    auto r = run("families --format csv");
    EXPECT_EQ(r.code, 0);
    EXPECT_NE(r.out.find("pell-lucas,\"K_{Q,n}\",\"(2,2;2,2,1)\""), std::string::npos) << r.out;
}

TEST(Cli, VerifyJacobsthalSummationFails) {
    auto cfg = write_temp("jac.json", R"({"identities":["summation"],"families":[{"name":"jacobsthal"}]})");
    auto r = run("verify --config " + cfg, true);
    EXPECT_EQ(r.code, 1);
    EXPECT_NE(r.out.find("denominator zero"), std::string::npos);
}

TEST(Cli, VerifyEmptyIdentitiesIsConfigError) {
    auto cfg = write_temp("empty.json", R"({"identities":[]})");
    auto r = run("verify --config " + cfg, true);
    EXPECT_EQ(r.code, 2);
    EXPECT_NE(r.out.find("empty"), std::string::npos);
}

TEST(Cli, VerifyPassingSubsetAndDeterminism) {
    auto cfg = write_temp("ok.json", R"({"identities":["vajda","cassini_matrix"],
        "ranges":{"vajda":{"n":[0,3],"r":[0,2],"s":[0,2]},"cassini_matrix":{"n":[1,3]}}})");
    std::string reports = ::testing::TempDir() + "reports.jsonl";
    auto a = run("verify --config " + cfg + " --out " + reports);
    EXPECT_EQ(a.code, 0);
    std::ifstream in(reports);
    std::string first((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    auto b = run("verify --config " + cfg + " --out " + reports);
    std::ifstream in2(reports);
    std::string second((std::istreambuf_iterator<char>(in2)), std::istreambuf_iterator<char>());
    EXPECT_FALSE(first.empty());
    EXPECT_EQ(first, second);
    EXPECT_EQ(a.out, b.out);
    EXPECT_NE(a.out.find("vajda,396,"), std::string::npos) << a.out;
}
