#include <gtest/gtest.h>

#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "hh/cli.hpp"

using json = nlohmann::json;

namespace {

struct CliRun {
    int code;
    std::string out;
    std::string err;
};

CliRun cli(std::vector<std::string> args) {
    args.insert(args.begin(), "hh-verify");
    std::vector<const char*> argv;
    for (const auto& a : args) argv.push_back(a.c_str());
    std::ostringstream out, err;
    const int code = hh::run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
    return {code, out.str(), err.str()};
}

}  // namespace

TEST(Cli, Moment) {
    const CliRun r = cli({"moment", "--xi", "1", "--omega", "1", "--eta", "0", "--s", "1"});
    ASSERT_EQ(r.code, 0) << r.err;
    const json j = json::parse(r.out);
    EXPECT_NEAR(j["value"].get<double>(), 1.0 / 6.0, 1e-15);
    EXPECT_LT(j["oracle_residual"].get<double>(), 1e-12);
}

TEST(Cli, Bound) {
    const CliRun r = cli({"bound", "--case", "T31_general", "--f", "pow:2", "--a", "0", "--b", "1", "--lambda", "1",
                       "--mu", "1", "--s", "1", "--q", "1"});
    ASSERT_EQ(r.code, 0) << r.err;
    const json j = json::parse(r.out);
    EXPECT_NEAR(j["lhs"].get<double>(), 1.0 / 6.0, 1e-14);
    EXPECT_NEAR(j["bound"].get<double>(), 0.25, 1e-14);
    EXPECT_NEAR(j["slack"].get<double>(), 1.0 / 12.0, 1e-14);
    EXPECT_EQ(j["case"], "T31_general");
    EXPECT_TRUE(j["preset"].is_null());
}

TEST(Cli, MeansCsv) {
    const CliRun r = cli({"means", "--theorem", "T41", "--a", "1", "--b", "2", "--s", "2", "--q", "1", "--lambda", "1",
                       "--format", "csv"});
    ASSERT_EQ(r.code, 0) << r.err;
    std::istringstream in(r.out);
    std::string header, row;
    std::getline(in, header);
    std::getline(in, row);
    EXPECT_EQ(header.rfind("case,preset,a,b,lambda,mu,s,q,lhs,bound,slack,certified,branch_notes", 0), 0u);
    EXPECT_EQ(row.rfind("T41,,1,2,1,,2,1,", 0), 0u) << row;
}

TEST(Cli, PresetFillsPins) {
    const CliRun r = cli({"preset", "--id", "C35_half", "--f", "pow:2"});
    ASSERT_EQ(r.code, 0) << r.err;
    EXPECT_NEAR(json::parse(r.out)["bound"].get<double>(), 0.125, 1e-15);
    EXPECT_EQ(cli({"preset", "--id", "C35_half", "--lambda", "0.2"}).code, 2);
}

TEST(Cli, Certify) {
    const CliRun r = cli({"certify", "--f", "pow:1.5", "--q", "2"});
    ASSERT_EQ(r.code, 0) << r.err;
    const json j = json::parse(r.out);
    EXPECT_EQ(j["status"], "certified-analytic");
    EXPECT_DOUBLE_EQ(j["s"].get<double>(), 0.5);
    EXPECT_EQ(cli({"certify", "--f", "exp"}).code, 2);
    EXPECT_EQ(json::parse(cli({"certify", "--f", "exp", "--s", "1"}).out)["status"], "not-falsified");
}

TEST(Cli, UsageErrors) {
    EXPECT_EQ(cli({}).code, 2);
    EXPECT_EQ(cli({"moment", "--xi", "0.5"}).code, 2);
    EXPECT_EQ(cli({"moment", "--xi", "0.5", "--s", "1", "--bogus", "3"}).code, 2);
    EXPECT_EQ(cli({"moment", "--xi", "2", "--s", "1"}).code, 2);
    EXPECT_EQ(cli({"bound", "--case", "T33_qgt1", "--q", "1"}).code, 2);
    EXPECT_EQ(cli({"bound", "--case", "nope"}).code, 2);
    EXPECT_EQ(cli({"means", "--theorem", "T41", "--a", "-1", "--b", "2", "--s", "1"}).code, 2);
    EXPECT_EQ(cli({"moment", "--xi", "0.5", "--s", "1", "--format", "xml"}).code, 2);
    EXPECT_EQ(cli({"--help"}).code, 0);
}

TEST(Cli, SweepAndExitCodes) {
    const std::string cfg_path = ::testing::TempDir() + "hh_cli_cfg.json";
    const std::string out_path = ::testing::TempDir() + "hh_cli_report.json";
    {
        std::ofstream cfg(cfg_path);
        cfg << R"({"functions": ["pow:2"], "grid": {"lambda": [0, 1], "mu": [0.5], "s": 1, "q": [1, 2]},
                   "cases": "all", "seed": 4})";
    }
    CliRun r = cli({"sweep", "--config", cfg_path, "--out", out_path});
    ASSERT_EQ(r.code, 0) << r.err;
    std::ifstream in(out_path);
    const json j = json::parse(in);
    EXPECT_GT(j["records"].size(), 0u);
    EXPECT_TRUE(j["violations"].empty());

    {
        std::ofstream cfg(cfg_path);
        cfg << R"({"functions": ["pow:2"], "grid": {"lambda": ["x"]}})";
    }
    r = cli({"sweep", "--config", cfg_path});
    EXPECT_EQ(r.code, 2);
    EXPECT_NE(r.err.find("grid.lambda[0]"), std::string::npos);
    std::remove(cfg_path.c_str());
    std::remove(out_path.c_str());
}

TEST(Cli, SweepExitCodeTracksViolations) {
    // Exit code 1 exactly when the report lists violations.
    const std::string cfg_path = ::testing::TempDir() + "hh_cli_cfg2.json";
    {
        std::ofstream cfg(cfg_path);
        cfg << R"({"functions": ["pow:0.3"], "grid": {"a": 0.5, "b": 3, "lambda": [0.5], "s": 1, "q": 1},
                   "cases": ["T31_general"]})";
    }
    const CliRun r = cli({"sweep", "--config", cfg_path});
    const json j = json::parse(r.out);
    EXPECT_EQ(r.code, j["violations"].empty() ? 0 : 1);
    std::remove(cfg_path.c_str());
}

TEST(Cli, Errata) {
    const CliRun r = cli({"errata"});
    ASSERT_EQ(r.code, 0);
    const json j = json::parse(r.out);
    bool found = false;
    for (const json& e : j["errata"]) {
        if (e["id"] == "T32_tier2_display") {
            found = true;
            EXPECT_EQ(e["classification"], "erratum-confirmed");
        }
    }
    EXPECT_TRUE(found);
}
