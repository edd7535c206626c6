#include <gtest/gtest.h>

#include <sstream>
#include <string>
#include <vector>

#include "oreprime/cli.hpp"

using namespace oreprime;

namespace {

struct Run {
    int code;
    std::string out, err;
};

Run cli(std::vector<std::string> args) {
    args.insert(args.begin(), "oreprime");
    std::vector<const char*> argv;
    for (const auto& a : args) argv.push_back(a.c_str());
    std::ostringstream out, err;
    int code = runCli(static_cast<int>(argv.size()), argv.data(), out, err);
    return {code, out.str(), err.str()};
}

Json cliJson(std::vector<std::string> args, int expectCode = 0) {
    args.push_back("--json");
    auto r = cli(args);
    EXPECT_EQ(r.code, expectCode) << r.out << r.err;
    return Json::parse(r.out);
}

}  // namespace

TEST(Cli, ClassifyQuaternionGolden) {
    auto j = cliJson({"classify", "--ring", "HQ[t]", "--poly", "t^2+1"});
    EXPECT_EQ(j["verdicts"]["extremely"], "No");
    EXPECT_EQ(j["verdicts"]["completely"], "No");
    EXPECT_EQ(j["verdicts"]["structurally"], "Yes");
    EXPECT_EQ(j["verdicts"]["weakly"], "Yes");
    EXPECT_EQ(j["schema"], kReportSchema);
    EXPECT_EQ(j["monic"], "t^2 + 1");
}

TEST(Cli, PositionalAndOptionFormsAgree) {
    EXPECT_EQ(cliJson({"classify", "--ring", "HQ[x]", "(x-j)*(x-i)"}),
              cliJson({"classify", "--ring", "HQ[x]", "--poly", "(x-j)*(x-i)"}));
}

TEST(Cli, SimilarWitnessPassesChecks) {
    auto j = cliJson({"similar", "--ring", "HQ[t]", "t-i", "t-j"});
    EXPECT_EQ(j["verdict"]["value"], "Yes");
    for (const char* k : {"relation", "leftComaximal", "rightComaximal", "reduced"}) EXPECT_TRUE(j["witnessChecks"][k]);
}

TEST(Cli, LabExamples) {
    auto r = cli({"lab", "--ring", "M2(GF(2))", "--check", "examples"});
    EXPECT_EQ(r.code, 0);
    EXPECT_EQ(r.out.find("FAIL"), std::string::npos);
}

TEST(Cli, FactorOrders) {
    auto right = cliJson({"factor", "--ring", "GF(4)[t;frob]", "t^3+t"});
    auto left = cliJson({"factor", "--ring", "GF(4)[t;frob]", "--order", "left", "t^3+t"});
    EXPECT_EQ(right["atoms"].size(), left["atoms"].size());
    EXPECT_EQ(left["order"], "left");
}

TEST(Cli, ExitCodes) {
    EXPECT_EQ(cli({"classify", "--ring", "HQ[t]", "t^^2"}).code, kExitUsage);
    EXPECT_EQ(cli({"classify", "--ring", "HQ[t]", "1"}).code, kExitUsage);
    EXPECT_EQ(cli({"classify", "--ring", "HQ[t]"}).code, kExitUsage);
    EXPECT_EQ(cli({"classify", "--poly", "t"}).code, kExitUsage);
    EXPECT_EQ(cli({"similar", "--ring", "HQ[t]", "t"}).code, kExitUsage);
    EXPECT_EQ(cli({"frobnicate"}).code, kExitUsage);
    EXPECT_EQ(cli({"bound", "--ring", "ZZ[t]", "t"}).code, kExitUsage);
    EXPECT_EQ(cli({"lab", "--ring", "M2(GF(4))", "--cap", "10"}).code, kExitCap);
    EXPECT_EQ(cli({"lab", "--ring", "M2(GF(2))", "--check", "bridge"}).code, kExitUsage);
    EXPECT_EQ(cli({"--help"}).code, kExitOk);
}

TEST(Cli, InconclusiveIsSuccess) {
    auto j = cliJson({"similar", "--ring", "QX[t;shift]", "t+x", "t+x+1"});
    EXPECT_EQ(j["verdict"]["value"], "Inconclusive");
}

TEST(Cli, ParseErrorReportsPosition) {
    auto j = cliJson({"classify", "--ring", "HQ[t]", "t+*2"}, kExitUsage);
    EXPECT_EQ(j["error"]["kind"], "ParseError");
    EXPECT_TRUE(j["error"].contains("position"));
}

TEST(Cli, EnvironmentCap) {
    ::setenv("OREPRIME_CAP", "10", 1);
    EXPECT_EQ(cli({"lab", "--ring", "M2(GF(2))"}).code, kExitCap);
    EXPECT_EQ(cli({"lab", "--ring", "M2(GF(2))", "--cap", "100"}).code, kExitOk);
    ::setenv("OREPRIME_CAP", "lots", 1);
    EXPECT_EQ(cli({"lab", "--ring", "M2(GF(2))"}).code, kExitUsage);
    ::unsetenv("OREPRIME_CAP");
}

TEST(Cli, ValidateReport) {
    auto j = cliJson({"validate", "--ring", "GF(4)[t;frob]", "--deg", "2"});
    EXPECT_EQ(j["generators"], 20);
    EXPECT_TRUE(j["mismatches"].empty());
}

TEST(Cli, CorpusReplays) {
    auto j = cliJson({"corpus", "--dir", std::string(OREPRIME_SOURCE_DIR) + "/corpus"});
    EXPECT_TRUE(j["ok"]) << j.dump(2);
    EXPECT_GT(j["cases"].get<int>(), 20);
}

TEST(Cli, CorpusDetectsWrongGolden) {
    auto dir = std::filesystem::temp_directory_path() / "oreprime_corpus_test";
    std::filesystem::create_directories(dir);
    std::ofstream(dir / "bad.json") << R"({"cases": [{"note": "wrong", "command": "bound", "ring": "HQ[t]",
        "args": ["t-i"], "expect": {"bound": "t^2 - 1"}}]})";
    auto j = cliJson({"corpus", "--dir", dir.string()}, kExitInternal);
    EXPECT_EQ(j["failures"].size(), 1u);
    std::filesystem::remove_all(dir);
}

TEST(Cli, OutputIsDeterministic) {
    for (std::vector<std::string> args : {std::vector<std::string>{"classify", "--ring", "GF(9)[t;frob]", "t^2+t+a"},
                                         std::vector<std::string>{"similar", "--ring", "HQ[t]", "t-i", "t-k"},
                                         std::vector<std::string>{"lab", "--ring", "T2(GF(2))"}})
        EXPECT_EQ(cli(args).out, cli(args).out);
}

TEST(Cli, TextRendering) {
    auto r = cli({"factor", "--ring", "HQ[t]", "t^2+1"});
    EXPECT_EQ(r.out, "t^2 + 1 = 1 * (t - i) * (t + i)\n");
    EXPECT_NE(cli({"classify", "--ring", "HQ[t]", "t-i"}).out.find("completely  Yes"), std::string::npos);
}

TEST(Cli, MatcherWildcards) {
    std::string why;
    Json actual{{"a", 1}, {"b", {{"c", "x"}}}};
    EXPECT_TRUE(detail::matches(Json{{"b", {{"c", "*"}}}}, actual, "", why));
    EXPECT_FALSE(detail::matches(Json{{"d", "*"}}, actual, "", why));
    EXPECT_FALSE(detail::matches(Json{{"a", 2}}, actual, "", why));
}
