#include <gtest/gtest.h>

#include <cstdlib>
#include <sstream>

#include "../tools/kosh_cli.hpp"

namespace {

struct Run {
    int code;
    std::string out, err;
};

Run cli(std::vector<std::string> args)
{
    args.insert(args.begin(), "kosh");
    std::vector<const char*> argv;
    for (const auto& a : args) argv.push_back(a.c_str());
    std::ostringstream out, err;
    const int code = kosh::cli::run(int(argv.size()), argv.data(), out, err);
    return {code, out.str(), err.str()};
}

} // namespace

TEST(Cli, EvalZetaAtInfinity)
{
    const auto r = cli({"eval", "zeta_p", "--p", "inf", "--s", "2"});
    ASSERT_EQ(r.code, 0) << r.err;
    const auto j = nlohmann::json::parse(r.out);
    EXPECT_NEAR(j["re"].get<double>(), kosh::pi * kosh::pi / 6.0, 1e-15);
    EXPECT_EQ(j["method"], "closed_form");
}

TEST(Cli, EvalTextAndComplexArgument)
{
    const auto r = cli({"--format", "text", "eval", "zeta_p", "--p", "1", "--s", "0.5+3i"});
    ASSERT_EQ(r.code, 0) << r.err;
    EXPECT_NE(r.out.find('i'), std::string::npos);
}

TEST(Cli, VerifyLerchAtZero)
{
    const auto r = cli({"verify", "lerch-gen", "--p", "zero", "--m", "0"});
    ASSERT_EQ(r.code, 0) << r.err;
    const auto j = nlohmann::ordered_json::parse(r.out);
    std::vector<std::string> keys;
    for (auto it = j.begin(); it != j.end(); ++it) keys.push_back(it.key());
    const std::vector<std::string> expected = {"id", "params", "sides", "max_abs_dev", "max_rel_dev", "tol", "pass", "diag"};
    EXPECT_EQ(keys, expected);
    EXPECT_TRUE(j["pass"].get<bool>());
    const double closed = std::pow(kosh::pi, 3) / 4.0; // (2^3 - 1) pi^3/28
    for (const auto& s : j["sides"]) EXPECT_NEAR(s["re"].get<double>(), closed, 1e-12);
}

TEST(Cli, ExitCodes)
{
    EXPECT_EQ(cli({"verify", "no-such-id"}).code, 2);
    EXPECT_EQ(cli({"eval", "no_such_function", "--p", "1", "--s", "2"}).code, 2);
    EXPECT_EQ(cli({"eval", "zeta_p", "--p", "1", "--s", "2+zi"}).code, 2);
    EXPECT_EQ(cli({"eval", "zeta_p", "--p", "1", "--s", "1"}).code, 2);
    EXPECT_EQ(cli({"verify", "dedekind", "--p", "1"}).code, 2);
    EXPECT_EQ(cli({"frobnicate"}).code, 2);
    EXPECT_EQ(cli({"--profile", "turbo", "verify", "dedekind", "--p", "1", "--alpha", "2"}).code, 2);
    EXPECT_EQ(cli({"verify", "page220", "--p", "1", "--alpha", "1.5", "--tol", "1e-300"}).code, 1);
    EXPECT_EQ(cli({"--help"}).code, 0);
}

TEST(Cli, ByteDeterministic)
{
    const std::vector<std::string> args = {"verify", "kosh-theta", "--p", "1", "--a", "1"};
    const auto a = cli(args), b = cli(args);
    EXPECT_EQ(a.code, 0);
    EXPECT_EQ(a.out, b.out);
}

TEST(Cli, RootsCsv)
{
    const auto r = cli({"--format", "csv", "roots", "--p", "1", "--count", "3"});
    ASSERT_EQ(r.code, 0);
    std::istringstream is(r.out);
    std::string header, line;
    std::getline(is, header);
    EXPECT_EQ(header, "j,lambda,weight,residual");
    int rows = 0;
    while (std::getline(is, line)) ++rows;
    EXPECT_EQ(rows, 3);
}

TEST(Cli, GlobalOptionsAfterSubcommand)
{
    const auto a = cli({"roots", "--p", "1", "--count", "2", "--format", "csv"});
    const auto b = cli({"--format", "csv", "roots", "--p", "1", "--count", "2"});
    EXPECT_EQ(a.code, 0);
    EXPECT_EQ(a.out, b.out);
}

TEST(Cli, TableSweepCsv)
{
    const auto r = cli({"table", "dedekind", "--p", "1", "--sweep", "alpha=0.5:2:4"});
    ASSERT_EQ(r.code, 0) << r.err;
    std::istringstream is(r.out);
    std::string header, line;
    std::getline(is, header);
    EXPECT_EQ(header, "identity,p,alpha,lhs,rhs,max_abs_dev,max_rel_dev,tol,pass");
    int rows = 0;
    while (std::getline(is, line)) {
        ++rows;
        EXPECT_EQ(line.substr(line.size() - 4), "true");
    }
    EXPECT_EQ(rows, 4);
}

TEST(Cli, ProfileFromEnvironment)
{
    ::setenv(kosh::cli::profile_env, "fast", 1);
    const auto fast = cli({"verify", "dedekind", "--p", "1", "--alpha", "2"});
    ::unsetenv(kosh::cli::profile_env);
    const auto desk = cli({"verify", "dedekind", "--p", "1", "--alpha", "2"});
    EXPECT_NEAR(nlohmann::json::parse(fast.out)["tol"].get<double>(), 1e-6, 1e-20);
    EXPECT_NEAR(nlohmann::json::parse(desk.out)["tol"].get<double>(), 1e-8, 1e-22);
}

TEST(Cli, SuiteSummary)
{
    const auto r = cli({"--profile", "fast", "suite", "--threads", "2"});
    EXPECT_EQ(r.code, 0) << r.out;
    EXPECT_NE(r.out.find("failed"), std::string::npos);
    EXPECT_NE(r.out.find(" 0 failed"), std::string::npos);
}
