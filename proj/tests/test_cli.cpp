#include <cstdlib>
#include <sstream>
#include <string>
#include <vector>

#include <gtest/gtest.h>

#include "cli.hpp"
#include "ohara/ohara.hpp"

using namespace ohara;

namespace {

struct Result {
    int code;
    std::string out;
    std::string err;
};

Result run_cli(std::vector<std::string> args) {
    args.insert(args.begin(), "ohara");
    std::vector<const char*> argv;
    for (const auto& a : args) argv.push_back(a.c_str());
    std::ostringstream out, err;
    const int code = cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
    return {code, out.str(), err.str()};
}

} // namespace

TEST(Cli, KroneckerBothMethods) {
    const auto r = run_cli({"kronecker", "--n", "2", "--k", "2", "--r", "2", "--method", "both"});
    EXPECT_EQ(r.code, 0) << r.err;
    EXPECT_NE(r.out.find("= 1\n"), std::string::npos);
    EXPECT_NE(r.out.find("both"), std::string::npos);
}

TEST(Cli, KroneckerJson) {
    const auto r = run_cli({"kronecker", "--n", "3", "--k", "3", "--r", "3", "--format", "json"});
    ASSERT_EQ(r.code, 0) << r.err;
    const auto j = json::parse(r.out);
    EXPECT_EQ(j.at("value"), to_json(kronecker_two_row(3, 3, 3, Method::difference_formula).value));
    EXPECT_EQ(j.at("lambda"), json::parse("[6,3]"));
    EXPECT_TRUE(j.contains("witness_count_by_tree"));
}

TEST(Cli, PlethysmValue) {
    const auto r = run_cli({"plethysm", "--mu", "3,3,2,1", "--k", "6", "--r", "20", "--method", "difference", "--format", "json"});
    ASSERT_EQ(r.code, 0) << r.err;
    EXPECT_EQ(json::parse(r.out).at("value"), 72);
}

TEST(Cli, PlethysmGeneral) {
    const auto r = run_cli({"plethysm-general", "--lambda", "[5,4]", "--mu", "2,1", "--nu", "2,1"});
    ASSERT_EQ(r.code, 0) << r.err;
    EXPECT_NE(r.out.find("= 1\n"), std::string::npos);
}

TEST(Cli, TreesDotContainsSampleRoot) {
    const auto r = run_cli({"trees", "koh", "--n", "8", "--k", "9", "--format", "dot"});
    ASSERT_EQ(r.code, 0) << r.err;
    EXPECT_NE(r.out.find("([4,3,1,1], 8, 9)"), std::string::npos);
    EXPECT_NE(r.out.find("label=\"14\""), std::string::npos);
}

TEST(Cli, TreesJsonRoundTrips) {
    const auto r = run_cli({"trees", "koh", "--n", "4", "--k", "4", "--format", "json"});
    ASSERT_EQ(r.code, 0) << r.err;
    const auto j = json::parse(r.out);
    const auto trees = enumerate_koh_trees(4, 4);
    ASSERT_EQ(j.at("count"), trees.size());
    for (std::size_t i = 0; i < trees.size(); ++i) EXPECT_EQ(*koh_from_json(j.at("trees")[i]), *trees[i]);
}

TEST(Cli, MarkedTreesCountMatchesCoefficient) {
    const auto r = run_cli({"trees", "goh", "--mu", "2,1", "--k", "3", "--r", "2", "--format", "json"});
    ASSERT_EQ(r.code, 0) << r.err;
    const auto j = json::parse(r.out);
    EXPECT_EQ(j.at("count"), to_json(plethysm_two_row({2, 1}, 3, 2, Method::difference_formula).value));
    for (const auto& t : j.at("trees")) EXPECT_TRUE(t.contains("marks"));
}

TEST(Cli, ExportDefaultsToDot) {
    const auto r = run_cli({"export", "goh", "--mu", "2,1", "--k", "2"});
    ASSERT_EQ(r.code, 0) << r.err;
    EXPECT_EQ(r.out.rfind("digraph goh", 0), 0u);
}

TEST(Cli, OutputIndependentOfJobs) {
    const auto a = run_cli({"--jobs", "1", "trees", "goh", "--mu", "3,2,1", "--k", "3", "--format", "json"});
    const auto b = run_cli({"--jobs", "4", "trees", "goh", "--mu", "3,2,1", "--k", "3", "--format", "json"});
    EXPECT_EQ(a.code, 0);
    EXPECT_EQ(a.out, b.out);
    const auto c = run_cli({"--jobs", "1", "verify", "koh", "--max-n", "4", "--max-k", "4"});
    const auto d = run_cli({"--jobs", "3", "verify", "koh", "--max-n", "4", "--max-k", "4"});
    EXPECT_EQ(c.out, d.out);
}

TEST(Cli, VerifyGohPasses) {
    const auto r = run_cli({"verify", "goh", "--max-size", "4", "--max-k", "3"});
    EXPECT_EQ(r.code, 0) << r.out << r.err;
    EXPECT_NE(r.out.find("summary:"), std::string::npos);
    EXPECT_EQ(r.out.find("FAIL"), std::string::npos);
}

TEST(Cli, VerifyKohPasses) {
    const auto r = run_cli({"verify", "koh", "--max-n", "5", "--max-k", "5", "--format", "json"});
    EXPECT_EQ(r.code, 0) << r.err;
    const auto j = json::parse(r.out);
    EXPECT_EQ(j.at("passed"), j.at("total"));
}

TEST(Cli, UsageErrorsNameTheFlag) {
    auto r = run_cli({"kronecker", "--n", "2", "--k", "2"});
    EXPECT_EQ(r.code, 2);
    EXPECT_NE(r.err.find("--r"), std::string::npos);
    r = run_cli({"plethysm", "--mu", "1,2", "--k", "2", "--r", "0"});
    EXPECT_EQ(r.code, 2);
    EXPECT_NE(r.err.find("--mu"), std::string::npos);
    r = run_cli({"kronecker", "--n", "2", "--k", "2", "--r", "1", "--method", "fast"});
    EXPECT_EQ(r.code, 2);
    EXPECT_NE(r.err.find("--method"), std::string::npos);
    EXPECT_EQ(run_cli({}).code, 2);
    EXPECT_EQ(run_cli({"kronecker", "--n", "2", "--k", "2", "--r", "3"}).code, 2);
}

TEST(Cli, BudgetExceededIsCleanFailure) {
    const auto r = run_cli({"--max-trees", "5", "trees", "koh", "--n", "8", "--k", "9"});
    EXPECT_EQ(r.code, 1);
    EXPECT_NE(r.err.find("BUDGET_EXCEEDED"), std::string::npos);
    EXPECT_TRUE(r.out.empty());
}

TEST(Cli, EnvironmentOverridesBudget) {
    ::setenv("OHARA_MAX_TREES", "5", 1);
    const auto r = run_cli({"trees", "koh", "--n", "8", "--k", "9"});
    ::unsetenv("OHARA_MAX_TREES");
    EXPECT_EQ(r.code, 1);
    EXPECT_NE(r.err.find("BUDGET_EXCEEDED"), std::string::npos);
}

TEST(Cli, HelpExitsZero) {
    const auto r = run_cli({"--help"});
    EXPECT_EQ(r.code, 0);
    EXPECT_NE(r.out.find("kronecker"), std::string::npos);
}
