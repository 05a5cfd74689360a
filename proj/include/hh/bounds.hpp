#pragma once

#include <optional>
#include <span>
#include <string>
#include <string_view>

#include "hh/functions.hpp"
#include "hh/identity.hpp"

namespace hh {

enum class BoundCase {
    T31_general,
    T31_s_minus1,
    T32_tier1,
    T32_tier2,
    T33_q1,
    T33_qgt1,
    T34_q1_tier1,
    T34_q1_tier2,
    T34_qgt1_tier1,
    T34_qgt1_tier2,
};

std::span<const BoundCase> all_bound_cases() noexcept;
std::string_view to_string(BoundCase c) noexcept;
std::optional<BoundCase> bound_case_from_string(std::string_view id) noexcept;

/// q below this counts as q = 1.
inline constexpr double kQOneCutoff = 1.0 + 1e-9;
inline bool is_q_one(double q) noexcept { return q < kQOneCutoff; }

/// Endpoint data every bound is built from: the interval width and
/// A = |f'(a)|^q, B = |f'(b)|^q, M = |f'((a+b)/2)|^q.
struct EndpointData {
    double width = 0.0;
    double A = 0.0;
    double B = 0.0;
    double M = 0.0;
};

EndpointData endpoint_data(const FunctionSpec& f, double a, double b, double q);

/// Throws BranchError when (s, q) do not fit the case.
void check_branch(BoundCase c, double s, double q);

/// Bound value from endpoint data. Does not check branches.
double bound_value(BoundCase c, const EndpointData& d, double lambda, double mu, double s,
                   double q);

/// What the bound value is built from, for reports.
std::string_view branch_note(BoundCase c) noexcept;

/// Parameter columns of a report row. `mu` is absent for the mean theorems.
struct RowParams {
    double a = 0.0;
    double b = 0.0;
    double lambda = 0.0;
    std::optional<double> mu;
    double s = 0.0;
    double q = 1.0;
};

struct BoundResult {
    std::string case_id;
    std::string preset;  // empty unless produced from a preset
    std::string function_id;
    RowParams params;
    double lhs = 0.0;
    double bound = 0.0;
    double slack = 0.0;
    CertificateStatus certificate = CertificateStatus::NotFalsified;
    std::string branch_notes;

    bool certified() const noexcept { return certificate == CertificateStatus::CertifiedAnalytic; }
};

/// Slack below -1e-10 (1 + |bound|) counts as a violation.
bool is_violation(double slack, double bound) noexcept;
/// Violation on a row whose certificate was not falsified.
bool is_violation(const BoundResult& r) noexcept;

/// Certificate for |f'|^q being extended s-convex on [a, b]: the power rule
/// for "pow:<p>" ids when s = p - 1, the sampler otherwise.
ConvexityCertificate envelope_certificate(const FunctionSpec& f, double a, double b, double s,
                                          double q, ConvexitySampling sampling = {});

BoundResult eval_case(BoundCase c, const FunctionSpec& f, const BoundParams& p,
                      double tol = 1e-12);
BoundResult eval_case(BoundCase c, const FunctionSpec& f, const BoundParams& p, double tol,
                      const ConvexityCertificate& cert);

}  // namespace hh
