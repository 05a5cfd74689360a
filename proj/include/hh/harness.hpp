#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "hh/bounds.hpp"
#include "hh/errata.hpp"
#include "hh/means.hpp"
#include "hh/moments.hpp"
#include "hh/serialize.hpp"

namespace hh {

struct GridSpec {
    std::vector<double> a{0.0};
    std::vector<double> b{1.0};
    std::vector<double> lambda{1.0};
    std::vector<double> mu{1.0};
    /// nullopt is "auto": p - 1 for pow:<p>, 1 otherwise.
    std::vector<std::optional<double>> s{std::nullopt};
    std::vector<double> q{1.0};
};

/// Seeded (a, b, λ, μ) tuples; s and q are drawn from the grid lists.
struct DrawSpec {
    std::size_t count = 0;
    double a_lo = 0.0;
    double a_hi = 1.0;
    double width_lo = 0.1;
    double width_hi = 2.0;
};

struct MeansSpec {
    std::vector<MeanTheorem> theorems;
    std::vector<double> a;
    std::vector<double> b;
    std::vector<double> s;
    std::vector<double> q;
    std::vector<double> lambda;
    /// Seeded tuples with a in [a_lo, a_hi], b = a + width, s in (0, 2],
    /// q in [1, q_hi] (half of them at q = 1), λ in [0, 1].
    std::size_t draws = 0;
    double a_lo = 0.1;
    double a_hi = 5.0;
    double width_lo = 0.01;
    double width_hi = 5.0;
    double q_hi = 4.0;
};

struct OracleSpec {
    std::size_t moment_draws = 0;
    std::size_t identity_draws = 0;
};

struct SuiteConfig {
    std::vector<std::string> functions;
    std::optional<GridSpec> grid;
    bool lambda_eq_mu = false;
    DrawSpec draws;
    std::vector<BoundCase> cases;
    std::vector<std::string> presets;
    MeansSpec means;
    OracleSpec oracle;
    bool errata = false;
    double tolerance = 1e-12;
    std::uint64_t seed = 0;
    OutputFormat format = OutputFormat::Json;
    std::size_t samples = 256;
};

/// Throws ConfigError naming the offending field.
SuiteConfig parse_config(const nlohmann::json& j);
SuiteConfig load_config(const std::string& path);

struct CaseSummary {
    std::string key;  // case id, or preset id for preset rows
    std::size_t rows = 0;
    std::size_t certified = 0;
    std::size_t violations = 0;
    double min_slack = 0.0;
    double median_slack = 0.0;
};

/// Largest closed-form vs quadrature deviations (relative for moments and
/// Hölder weights, absolute for the identity).
struct OracleResiduals {
    double moment_general = 0.0;
    double moment_case = 0.0;
    double identity = 0.0;
    double holder_weight = 0.0;
    std::size_t moment_points = 0;
    std::size_t identity_points = 0;
};

/// ∫₀¹ |ξ - t| (ωt + η)^s dt by adaptive quadrature, graded toward a
/// vanishing weight at either end. Throws QuadratureError if not converged.
double moment_by_quadrature(const MomentSpec& m, double rel_tol = 1e-13);

OracleResiduals run_oracles(const OracleSpec& spec, std::uint64_t seed);

struct Report {
    std::vector<BoundResult> records;
    std::vector<BoundResult> violations;
    std::vector<ErratumItem> errata;
    std::vector<CaseSummary> summary;
    std::size_t record_count = 0;
    std::size_t skipped = 0;  // parameter combinations outside a case's branch or domain
    std::size_t failed = 0;   // evaluations that threw (quadrature failures)
    std::optional<OracleResiduals> oracle;
};

/// Evaluates the suite and keeps every record in memory.
Report run_suite(const SuiteConfig& cfg);

/// Evaluates the suite and streams records to `out` as they are produced;
/// the returned report has no records. Output is identical to
/// write_report(out, run_suite(cfg), format).
Report stream_suite(const SuiteConfig& cfg, std::ostream& out, OutputFormat format);

/// Report holding only the erratum scan.
Report erratum_scan();

void write_report(std::ostream& out, const Report& report, OutputFormat format);

/// Worker count: HH_VERIFY_THREADS when set and nonzero, else the hardware
/// concurrency.
std::size_t worker_threads();

}  // namespace hh
