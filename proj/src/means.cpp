#include "hh/means.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <string>
#include <utility>

#include "hh/errors.hpp"

namespace hh {

namespace {

constexpr std::array<MeanTheorem, 6> kTheorems{
    MeanTheorem::T41,      MeanTheorem::T42,    MeanTheorem::T43_q1,
    MeanTheorem::T43_qgt1, MeanTheorem::T44_q1, MeanTheorem::T44_qgt1,
};

constexpr double kBranchEps = 1e-8;

}  // namespace

double arithmetic_mean(double a, double b) noexcept { return 0.5 * (a + b); }

double generalized_log_mean(double a, double b, double s) {
    if (!(a > 0.0) || !(b > 0.0)) {
        throw DomainError("generalized_log_mean: a and b must be positive");
    }
    if (!std::isfinite(s)) {
        throw ParameterError("generalized_log_mean: s must be finite");
    }
    if (std::fabs(b - a) <= 1e-12 * std::max(a, b)) {
        return a;
    }
    if (a > b) {
        std::swap(a, b);
    }
    const double la = std::log(a);
    const double lb = std::log(b);
    if (std::fabs(s) < kBranchEps) {
        return std::exp((b * lb - a * la) / (b - a) - 1.0);
    }
    if (std::fabs(s + 1.0) < kBranchEps) {
        return (b - a) / (lb - la);
    }
    // (b^{s+1} - a^{s+1}) / ((s+1)(b-a)) = a^{s+1} expm1((s+1) ln(b/a)) / ((s+1)(b-a))
    const double t = s + 1.0;
    const double r = lb - la;
    const double log_ratio = t * la + std::log(std::fabs(std::expm1(t * r))) -
                             std::log(std::fabs(t)) - std::log(b - a);
    return std::exp(log_ratio / s);
}

double mean_lhs(const MeanParams& mp) {
    const double a = mp.a;
    const double b = mp.b;
    const double s = mp.s;
    const double as = std::exp(s * std::log(a));
    const double bs = std::exp(s * std::log(b));
    const double As = std::exp(s * std::log(arithmetic_mean(a, b)));
    const double Ls = std::exp(s * std::log(generalized_log_mean(a, b, s)));
    return std::fabs(mp.lambda * arithmetic_mean(as, bs) + (1.0 - mp.lambda) * As - Ls);
}

std::span<const MeanTheorem> all_mean_theorems() noexcept { return kTheorems; }

std::string_view to_string(MeanTheorem t) noexcept {
    switch (t) {
        case MeanTheorem::T41:
            return "T41";
        case MeanTheorem::T42:
            return "T42";
        case MeanTheorem::T43_q1:
            return "T43_q1";
        case MeanTheorem::T43_qgt1:
            return "T43_qgt1";
        case MeanTheorem::T44_q1:
            return "T44_q1";
        case MeanTheorem::T44_qgt1:
            return "T44_qgt1";
    }
    return "unknown";
}

std::optional<MeanTheorem> mean_theorem_from_string(std::string_view id) noexcept {
    for (MeanTheorem t : kTheorems) {
        if (to_string(t) == id) {
            return t;
        }
    }
    return std::nullopt;
}

BoundCase mean_root_case(MeanTheorem t) noexcept {
    switch (t) {
        case MeanTheorem::T41:
            return BoundCase::T31_general;
        case MeanTheorem::T42:
            return BoundCase::T32_tier1;
        case MeanTheorem::T43_q1:
            return BoundCase::T33_q1;
        case MeanTheorem::T43_qgt1:
            return BoundCase::T33_qgt1;
        case MeanTheorem::T44_q1:
            return BoundCase::T34_q1_tier1;
        case MeanTheorem::T44_qgt1:
            return BoundCase::T34_qgt1_tier1;
    }
    return BoundCase::T31_general;
}

void check_mean_params(MeanTheorem t, const MeanParams& mp) {
    if (!(mp.a > 0.0) || !(mp.b > 0.0) || !std::isfinite(mp.a) || !std::isfinite(mp.b)) {
        throw ParameterError("means: a and b must be finite and positive");
    }
    if (mp.a > mp.b) {
        throw ParameterError("means: need a <= b");
    }
    if (!(mp.s > 0.0 && mp.s <= 2.0)) {
        throw ParameterError("means: s must lie in (0, 2]");
    }
    if (!(mp.lambda >= 0.0 && mp.lambda <= 1.0)) {
        throw ParameterError("means: lambda must lie in [0, 1]");
    }
    if (!(mp.q >= 1.0) || !std::isfinite(mp.q)) {
        throw ParameterError("means: q must be finite and >= 1");
    }
    const std::string name(to_string(t));
    if (mp.s - 1.0 < -1.0 + 1e-6) {
        throw BranchError(name + " requires s >= 1e-6");
    }
    const double sq = (mp.s - 1.0) * mp.q;
    switch (t) {
        case MeanTheorem::T41:
        case MeanTheorem::T42:
            if (!(sq > -1.0 && sq <= 1.0)) {
                throw BranchError(name + " requires -1 < (s-1)q <= 1");
            }
            break;
        case MeanTheorem::T43_q1:
        case MeanTheorem::T44_q1:
            if (!is_q_one(mp.q)) {
                throw BranchError(name + " requires q = 1 (q < 1 + 1e-9)");
            }
            break;
        case MeanTheorem::T43_qgt1:
        case MeanTheorem::T44_qgt1:
            if (is_q_one(mp.q)) {
                throw BranchError(name + " requires q >= 1 + 1e-9");
            }
            break;
    }
}

BoundResult eval_mean_bound(MeanTheorem t, const MeanParams& mp) {
    check_mean_params(t, mp);
    const BoundCase root = mean_root_case(t);
    const double sigma = mp.s - 1.0;
    const FunctionSpec f = make_power(mp.s, mp.a, mp.b);
    BoundResult r;
    r.case_id = std::string(to_string(t));
    r.function_id = f.id();
    r.params = RowParams{mp.a, mp.b, mp.lambda, std::nullopt, mp.s, mp.q};
    r.certificate = envelope_certificate(f, mp.a, mp.b, sigma, mp.q).status;
    r.branch_notes = "f = x^s with |f'|^q extended (s-1)-convex, mu = lambda; via " +
                     std::string(to_string(root));
    if (mp.a == mp.b) {
        r.branch_notes += "; a=b";
        return r;
    }
    r.lhs = mean_lhs(mp);
    r.bound = bound_value(root, endpoint_data(f, mp.a, mp.b, mp.q), mp.lambda, mp.lambda, sigma, mp.q);
    r.slack = r.bound - r.lhs;
    return r;
}

}  // namespace hh
