#include <gtest/gtest.h>
#include <json.hpp>

#include <array>
#include <cstdio>
#include <string>
#include <sys/wait.h>

namespace {

struct Run {
    int code;
    std::string out;
};

Run run(const std::string& args) {
    const std::string cmd = std::string(GALTORS_CLI) + " " + args + " 2>&1";
    FILE* p = popen(cmd.c_str(), "r");
    if (!p) return {-1, ""};
    std::string out;
    std::array<char, 4096> buf;
    while (std::fgets(buf.data(), buf.size(), p)) out += buf.data();
    const int st = pclose(p);
    return {WIFEXITED(st) ? WEXITSTATUS(st) : -1, out};
}

bool has(const Run& r, const std::string& s) { return r.out.find(s) != std::string::npos; }

}  // namespace

TEST(Cli, GroupSummary) {
    const auto r = run("group 3B.1.1 3");
    EXPECT_EQ(r.code, 0) << r.out;
    EXPECT_TRUE(has(r, "CHECK group.3B.1.1 pass order=6 index=8 minus-identity=no")) << r.out;
}

TEST(Cli, GroupFromGenerators) {
    const auto r = run("group \"[[1,1,0,1],[2,0,0,1]]\" 3");
    EXPECT_EQ(r.code, 0) << r.out;
    EXPECT_TRUE(has(r, "order=6")) << r.out;
}

TEST(Cli, JsonOutputParses) {
    const auto r = run("group 3B.1.1 3 --json");
    ASSERT_EQ(r.code, 0) << r.out;
    const auto doc = nlohmann::json::parse(r.out);
    EXPECT_EQ(doc.at("command"), "group");
    EXPECT_EQ(doc.at("checks").at(0).at("status"), "pass");
}

TEST(Cli, JMapPole) {
    const auto r = run("jmap 2B 0");
    EXPECT_EQ(r.code, 0);
    EXPECT_TRUE(has(r, "pole")) << r.out;
}

TEST(Cli, TorsionAndTables) {
    const auto t = run("torsion \"[1,0,1,-1,0]\"");
    EXPECT_EQ(t.code, 0);
    EXPECT_TRUE(has(t, "C6")) << t.out;
    const auto tab = run("tables");
    EXPECT_EQ(tab.code, 0);
    EXPECT_TRUE(has(tab, "C21")) << tab.out;
}

TEST(Cli, SearchOutputIsMarkedAsEvidence) {
    const auto r = run("fiber-search 3Cs.1.1 9B0-9a --height 10");
    EXPECT_EQ(r.code, 0) << r.out;
    EXPECT_TRUE(has(r, "evidence-only")) << r.out;
    EXPECT_TRUE(has(r, "not a complete list")) << r.out;
}

TEST(Cli, UsageErrorsExit64) {
    EXPECT_EQ(run("").code, 64);
    EXPECT_EQ(run("group NoSuchGroup").code, 64);
    EXPECT_EQ(run("identify \"[0,0]\"").code, 64);
    EXPECT_EQ(run("jmap 2B 1/0").code, 64);
    EXPECT_EQ(run("verify-all --inject-fault nope").code, 64);
    EXPECT_EQ(run("frobnicate").code, 64);
}

TEST(Cli, EnvironmentErrorsExit2) {
    EXPECT_EQ(run("verify-all --catalog /nonexistent/file.catalog").code, 2);
    EXPECT_EQ(run("tables --inject-fault environment-error").code, 2);
}

TEST(Cli, ComputationalFailuresExit1) {
    EXPECT_EQ(run("tables --inject-fault compute-error").code, 1);
    const auto r = run("verify-all --inject-fault group-generator");
    EXPECT_EQ(r.code, 1);
    EXPECT_TRUE(has(r, "CHECK group-orders fail")) << r.out;
}

TEST(Cli, IdentifyAtLevelTwo) {
    const auto r = run("identify \"[-3,1]\" 2 1000");
    EXPECT_EQ(r.code, 0) << r.out;
    EXPECT_TRUE(has(r, "consistent-with: 2Cn")) << r.out;
    EXPECT_TRUE(has(r, "eliminated: 2B")) << r.out;
}
