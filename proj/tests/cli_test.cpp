#include <unistd.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <gtest/gtest.h>
#include <json.hpp>

#include <fracpow/cli.hpp>

#include "support/oracles.hpp"

using nlohmann::json;

namespace
{

struct Result {
    int code = 0;
    std::string out;
    std::string err;
};

Result call(const std::vector<std::string> &args)
{
    std::ostringstream out, err;
    const int code = fracpow::cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

std::filesystem::path temp_path(const std::string &name)
{
    return std::filesystem::temp_directory_path() / ("fracpow_cli_" + std::to_string(::getpid()) + "_" + name);
}

} // namespace

TEST(Cli, PhiOne)
{
    const auto r = call({"cyclo", "phi", "1"});
    ASSERT_EQ(r.code, 0);
    EXPECT_EQ(json::parse(r.out)["poly"], "1 - x");
    EXPECT_EQ(call({"--format", "text", "cyclo", "phi", "1"}).out, "1 - x\n");
}

TEST(Cli, TauMatchesExpansion)
{
    const auto r = call({"tau", "--upto", "30"});
    ASSERT_EQ(r.code, 0);
    const auto expected = oracle::tau_by_expansion(30);
    const auto j = json::parse(r.out)["tau"];
    ASSERT_EQ(j.size(), 30u);
    for (std::size_t i = 0; i < 30; ++i) {
        EXPECT_EQ(j[i][0].get<int>(), static_cast<int>(i + 1));
        EXPECT_EQ(j[i][1].get<std::string>(), std::to_string(expected[i]));
    }
    EXPECT_EQ(json::parse(call({"tau", "--upto", "1"}).out)["tau"][0][1], "1");
}

TEST(Cli, DecideVerdicts)
{
    const auto a = json::parse(call({"decide", "--m", "2:1,3:1"}).out);
    EXPECT_EQ(a["verdict"], "impossible_by_theorem");
    EXPECT_EQ(a["certificate"]["p"], 2);
    EXPECT_EQ(a["certificate"]["t"], 1);
    EXPECT_EQ(a["certificate"]["contradiction"]["d_gcd"], 1);
    EXPECT_EQ(a["certificate"]["contradiction"]["A"], 2);
    EXPECT_EQ(json::parse(call({"decide", "--m", "2:1,4:1"}).out)["verdict"], "degenerate_gcd");
    EXPECT_EQ(json::parse(call({"decide", "--m", "1:1,2:1"}).out)["verdict"], "outside_hypothesis");
    const auto bad = call({"decide", "--m", "2:1,3:1", "--rhs-poly", "1 - x"});
    EXPECT_EQ(bad.code, 1);
    EXPECT_TRUE(bad.out.empty());
    EXPECT_EQ(json::parse(bad.err)["error"]["kind"], "precondition_error");
}

TEST(Cli, SolveReportsHalfExponent)
{
    const auto r = call({"solve", "--m", "2:1,3:1", "--cutoff", "3"});
    ASSERT_EQ(r.code, 0);
    const auto j = json::parse(r.out);
    EXPECT_EQ(j["cutoff"], "3/2");
    EXPECT_TRUE(j["verified"].get<bool>());
    EXPECT_EQ(j["nonintegral"][0], json::array({"1/2", "1"}));
}

TEST(Cli, ConstructThenCount)
{
    const auto path = temp_path("ruzsa.txt");
    const auto c = call({"--format", "text", "construct", "--kind", "ruzsa", "--bound", "10000"});
    ASSERT_EQ(c.code, 0);
    {
        std::ofstream f(path);
        f << c.out;
    }
    const auto r = call({"count", "--m", "1:1,2:1", "--set", path.string(), "--upto", "10000"});
    ASSERT_EQ(r.code, 0);
    const auto j = json::parse(r.out);
    EXPECT_EQ(j["constant_from"], 0);
    EXPECT_EQ(j["values"].size(), 10001u);
    for (const auto &v : j["values"]) {
        ASSERT_EQ(v.get<int>(), 1);
    }
    const auto over = call({"count", "--m", "2:1,3:1", "--set", path.string(), "--upto", "20001"});
    EXPECT_EQ(over.code, 2);
    EXPECT_TRUE(over.out.empty());
    EXPECT_NE(json::parse(over.err)["error"]["message"].get<std::string>().find("20000"), std::string::npos);
    std::filesystem::remove(path);
}

TEST(Cli, ConstructKinds)
{
    const auto m = json::parse(call({"construct", "--kind", "moser", "--k", "3", "--bound", "12"}).out);
    EXPECT_EQ(m["elements"], json::array({0, 1, 2, 9, 10, 11}));
    const auto d = json::parse(call({"construct", "--kind", "digit", "--k", "2", "--period", "3", "--bound", "9"}).out);
    EXPECT_EQ(d["elements"], json::array({0, 1, 8, 9}));
    EXPECT_EQ(call({"construct", "--kind", "digit", "--bound", "9"}).code, 2);
    EXPECT_EQ(call({"construct", "--kind", "other", "--bound", "9"}).code, 2);
}

TEST(Cli, CycloExpandAndPart)
{
    const auto e = json::parse(call({"cyclo", "expand", "2", "2"}).out);
    EXPECT_EQ(e["basis"], "phi");
    EXPECT_EQ(e["exps"], json::array({json::array({4, "1"})}));
    const auto p = json::parse(call({"cyclo", "part", "--poly", "1 + x + x^2", "--m", "2:1,3:1"}).out);
    EXPECT_EQ(p["part"]["exps"], json::array({json::array({3, "1"})}));
    EXPECT_EQ(p["residual"], "1");
}

TEST(Cli, Enumerate)
{
    const auto j = json::parse(call({"enumerate", "--b", "2", "--thetas", "3/2", "--below", "2"}).out);
    EXPECT_EQ(j["points"], json::array({"0", "1/2", "3/4", "1", "9/8", "5/4", "3/2", "13/8", "27/16", "7/4", "15/8", "2"}));
}

TEST(Cli, ErrorsAndDeterminism)
{
    for (const auto &args : std::vector<std::vector<std::string>>{
             {},
             {"solve", "--m", "3:1,2:1", "--cutoff", "4"},
             {"solve", "--m", "2:1,3:1", "--cutoff", "1/0"},
             {"solve", "--m", "2:1,3:1", "--cutoff", "-1"},
             {"tau", "--upto", "0"},
             {"--format", "xml", "tau", "--upto", "3"},
             {"cyclo"},
         }) {
        const auto r = call(args);
        EXPECT_EQ(r.code, 2) << r.err;
        EXPECT_TRUE(r.out.empty());
        EXPECT_TRUE(json::parse(r.err).contains("error"));
    }
    const auto h = call({"solve", "--m", "1:1,2:1", "--cutoff", "4"});
    EXPECT_EQ(h.code, 1);
    EXPECT_EQ(json::parse(h.err)["error"]["kind"], "hypothesis_error");
    EXPECT_EQ(call({"--help"}).code, 0);
    const std::vector<std::string> args{"decide", "--m", "4:1,6:1", "--rhs-poly", "1 + x^2"};
    EXPECT_EQ(call(args).out, call(args).out);
}
