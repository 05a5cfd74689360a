#include <gtest/gtest.h>

#include <cstdlib>
#include <sstream>

#include "hh/errors.hpp"
#include "hh/harness.hpp"

using namespace hh;
using json = nlohmann::json;

namespace {

json basic_config() {
    return json::parse(R"({
        "functions": ["pow:2"],
        "grid": {"a": 0, "b": 1, "lambda": [0, 0.3333333333333333, 0.5, 1], "s": 1, "q": [1, 2]},
        "lambda_eq_mu": true,
        "cases": "all",
        "seed": 1
    })");
}

std::string render(const Report& r, OutputFormat f) {
    std::ostringstream os;
    write_report(os, r, f);
    return os.str();
}

}  // namespace

TEST(Harness, QuadraticSweepHasNoViolations) {
    const Report r = run_suite(parse_config(basic_config()));
    EXPECT_GT(r.records.size(), 0u);
    EXPECT_TRUE(r.violations.empty());
    EXPECT_GT(r.skipped, 0u);  // q-branch and s = -1 mismatches
    // The power rule covers x^2 only at q = 1; q = 2 rows are sampled, never falsified.
    for (const BoundResult& row : r.records) {
        EXPECT_NE(row.certificate, CertificateStatus::Falsified) << row.case_id;
        if (row.params.q == 1.0) EXPECT_TRUE(row.certified()) << row.case_id;
    }
}

TEST(Harness, RecordsAreSorted) {
    const Report r = run_suite(parse_config(basic_config()));
    for (std::size_t i = 1; i < r.records.size(); ++i) {
        const auto& x = r.records[i - 1];
        const auto& y = r.records[i];
        EXPECT_LE(x.case_id, y.case_id);
        if (x.case_id == y.case_id) {
            EXPECT_LE(std::tie(x.params.a, x.params.b, x.params.lambda),
                      std::tie(y.params.a, y.params.b, y.params.lambda));
        }
    }
}

TEST(Harness, EmptyGridGivesEmptyReport) {
    json cfg = basic_config();
    cfg["grid"]["lambda"] = json::array();
    const Report r = run_suite(parse_config(cfg));
    EXPECT_TRUE(r.records.empty());
    EXPECT_EQ(r.record_count, 0u);
}

TEST(Harness, StreamingMatchesInMemory) {
    json cfg = basic_config();
    cfg["presets"] = "all";
    cfg["draws"] = {{"count", 20}, {"a", {0.0, 0.5}}, {"width", {0.1, 0.5}}};
    cfg["means"] = {{"theorems", "all"}, {"draws", {{"count", 30}}}};
    const SuiteConfig c = parse_config(cfg);
    for (OutputFormat f : {OutputFormat::Json, OutputFormat::Csv}) {
        std::ostringstream streamed;
        stream_suite(c, streamed, f);
        EXPECT_EQ(streamed.str(), render(run_suite(c), f));
    }
}

TEST(Harness, DeterministicAcrossThreadCounts) {
    json cfg = basic_config();
    cfg["functions"] = {"pow:2", "exp", "pow:1.5"};
    cfg["grid"]["s"] = {"auto", 0.5};
    cfg["draws"] = {{"count", 40}, {"a", {0.0, 1.0}}, {"width", {0.1, 1.0}}};
    const SuiteConfig c = parse_config(cfg);
    setenv("HH_VERIFY_THREADS", "1", 1);
    const std::string one = render(run_suite(c), OutputFormat::Json);
    setenv("HH_VERIFY_THREADS", "4", 1);
    const std::string four = render(run_suite(c), OutputFormat::Json);
    unsetenv("HH_VERIFY_THREADS");
    EXPECT_EQ(one, four);
    EXPECT_EQ(one, render(run_suite(c), OutputFormat::Json));
}

TEST(Harness, ReportShape) {
    json cfg = basic_config();
    cfg["oracle"] = {{"moment_draws", 50}, {"identity_draws", 20}};
    const json j = json::parse(render(run_suite(parse_config(cfg)), OutputFormat::Json));
    EXPECT_TRUE(j["records"].is_array());
    EXPECT_TRUE(j["violations"].is_array());
    EXPECT_TRUE(j["errata"].is_array());
    EXPECT_EQ(j["summary"]["records"], j["records"].size());
    EXPECT_LE(j["oracle_residuals"]["moment_general"].get<double>(), 1e-9);
    EXPECT_LE(j["oracle_residuals"]["identity"].get<double>(), 1e-10);
    const json& row = j["records"][0];
    for (const char* k : {"case", "preset", "params", "lhs", "bound", "slack", "certified", "branch_notes"}) {
        EXPECT_TRUE(row.contains(k)) << k;
    }
}

TEST(Harness, SummaryIsRecomputable) {
    const Report r = run_suite(parse_config(basic_config()));
    std::size_t total = 0;
    for (const CaseSummary& s : r.summary) {
        double mn = 1e300;
        for (const BoundResult& row : r.records) {
            if (row.case_id == s.key) mn = std::min(mn, row.slack);
        }
        EXPECT_EQ(s.min_slack, mn);
        EXPECT_LE(s.min_slack, s.median_slack);
        total += s.rows;
    }
    EXPECT_EQ(total, r.records.size());
}

TEST(Harness, FalsifiedRowsAreExcluded) {
    // Rows whose certificate was falsified never count as violations.
    json cfg = basic_config();
    cfg["functions"] = {"pow:3"};
    cfg["grid"]["a"] = 0.5;
    cfg["grid"]["b"] = 2.0;
    cfg["grid"]["s"] = -0.5;
    const Report r = run_suite(parse_config(cfg));
    for (const BoundResult& v : r.violations) {
        EXPECT_NE(v.certificate, CertificateStatus::Falsified);
    }
}

TEST(Harness, ConfigErrorsCarryPaths) {
    auto path_of = [](const char* text) {
        try {
            parse_config(json::parse(text));
        } catch (const ConfigError& e) {
            return e.path();
        }
        return std::string("<none>");
    };
    EXPECT_EQ(path_of(R"({"grid": {"lambda": [0, "x"]}})"), "grid.lambda[1]");
    EXPECT_EQ(path_of(R"({"grid": {"s": ["auto", "foo"]}})"), "grid.s[1]");
    EXPECT_EQ(path_of(R"({"cases": ["T31_general", "T99"]})"), "cases[1]");
    EXPECT_EQ(path_of(R"({"bogus": 1})"), "bogus");
    EXPECT_EQ(path_of(R"({"functions": ["sin"]})"), "functions[0]");
    EXPECT_EQ(path_of(R"({"seed": -4})"), "seed");
    EXPECT_EQ(path_of(R"({"means": {"theorems": ["T45"]}})"), "means.theorems[0]");
    EXPECT_EQ(path_of(R"({"draws": {"width": [2, 1]}})"), "draws.width");
    EXPECT_EQ(path_of(R"([1, 2])"), "$");
}

TEST(Harness, ErratumScan) {
    const Report r = erratum_scan();
    ASSERT_FALSE(r.errata.empty());
    for (const ErratumItem& e : r.errata) {
        if (e.id == "moment_case(-1,2)_verbatim" || e.id == "T32_tier2_display") {
            EXPECT_EQ(e.classification, ErratumClass::ErratumConfirmed) << e.id;
        }
        if (e.id == "moment_case(1,0)" || e.id == "E15" || e.id == "moment_case(-1,2)") {
            EXPECT_EQ(e.classification, ErratumClass::Consistent) << e.id;
        }
        EXPECT_GT(e.points, 0u) << e.id;
    }
}

TEST(Harness, WorkerThreadsEnv) {
    setenv("HH_VERIFY_THREADS", "3", 1);
    EXPECT_EQ(worker_threads(), 3u);
    setenv("HH_VERIFY_THREADS", "0", 1);
    EXPECT_GE(worker_threads(), 1u);
    unsetenv("HH_VERIFY_THREADS");
}
