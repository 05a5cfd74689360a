#include "hh/bounds.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <string>

#include "hh/errors.hpp"
#include "hh/moments.hpp"

namespace hh {

namespace {

constexpr std::array<BoundCase, 10> kCases{
    BoundCase::T31_general,    BoundCase::T31_s_minus1,   BoundCase::T32_tier1,
    BoundCase::T32_tier2,      BoundCase::T33_q1,         BoundCase::T33_qgt1,
    BoundCase::T34_q1_tier1,   BoundCase::T34_q1_tier2,   BoundCase::T34_qgt1_tier1,
    BoundCase::T34_qgt1_tier2,
};

constexpr double kSMin = -1.0 + 1e-6;
constexpr double kViolationRel = 1e-10;

double K(double xi, double omega, double eta, double s) {
    return moment_general(MomentSpec{xi, omega, eta, s});
}

// weight^{1-1/q} · bracket^{1/q}, with roundoff-negative brackets clamped.
double holder_block(double weight, double bracket, double q) {
    const double br = std::max(bracket, 0.0);
    if (q == 1.0) {
        return br;
    }
    return std::pow(weight, 1.0 - 1.0 / q) * std::pow(br, 1.0 / q);
}

double sup_weight(double x) { return std::max(x, 1.0 - x); }

// (∫|x-t|^{q/(q-1)} dt)^{1-1/q}, symmetric in x ↔ 1-x. Scaled by max(x, 1-x) so
// the q ↓ 1 limit does not underflow.
double conj_norm(double x, double q) {
    const double p = q / (q - 1.0);
    const double g = sup_weight(x);
    const double k = std::min(x, 1.0 - x) / g;
    return g * std::exp((std::log(g) + std::log1p(std::pow(k, p + 1.0)) - std::log1p(p)) / p);
}

double conj_block(double x, double bracket, double q) {
    return conj_norm(x, q) * std::pow(std::max(bracket, 0.0), 1.0 / q);
}

double midpoint_relaxed(const EndpointData& d, double s) {
    return std::exp2(-s) * (d.A + d.B);
}

double t31_general(const EndpointData& d, double lam, double mu, double s, double q) {
    const double left = K(1.0 - lam, 1.0, 1.0, s) * d.A + K(1.0 - lam, -1.0, 1.0, s) * d.B;
    const double right = K(mu, 1.0, 0.0, s) * d.A + K(mu, -1.0, 2.0, s) * d.B;
    return d.width / 4.0 * std::exp2(-s / q) *
           (holder_block(abs_weight_integral(lam), left, q) +
            holder_block(abs_weight_integral(mu), right, q));
}

double t31_s_minus1(const EndpointData& d, double q) {
    const double left = moment_harmonic(1.0, 1.0, 1.0) * d.A + moment_harmonic(1.0, -1.0, 1.0) * d.B;
    const double right = moment_harmonic(0.0, 1.0, 0.0) * d.A + moment_harmonic(0.0, -1.0, 2.0) * d.B;
    const double w = abs_weight_integral(0.0);
    return d.width / 4.0 * std::exp2(1.0 / q) * (holder_block(w, left, q) + holder_block(w, right, q));
}

double t32(const EndpointData& d, double M, double lam, double mu, double s, double q) {
    const double left = K(1.0 - lam, 1.0, 0.0, s) * d.A + K(1.0 - lam, -1.0, 1.0, s) * M;
    const double right = K(mu, 1.0, 0.0, s) * M + K(mu, -1.0, 1.0, s) * d.B;
    return d.width / 4.0 *
           (holder_block(abs_weight_integral(lam), left, q) +
            holder_block(abs_weight_integral(mu), right, q));
}

double t33_q1(const EndpointData& d, double lam, double mu, double s) {
    const double c = std::exp2(s + 1.0) - 1.0;
    return d.width / 4.0 * std::exp2(-s) / (s + 1.0) *
           (sup_weight(lam) * (c * d.A + d.B) + sup_weight(mu) * (d.A + c * d.B));
}

double t33_qgt1(const EndpointData& d, double lam, double mu, double s, double q) {
    const double c = std::exp2(s + 1.0) - 1.0;
    return d.width / 4.0 * std::exp2(-s / q) *
           (conj_block(lam, (c * d.A + d.B) / (s + 1.0), q) +
            conj_block(mu, (d.A + c * d.B) / (s + 1.0), q));
}

double t34_q1(const EndpointData& d, double M, double lam, double mu, double s) {
    return d.width / (4.0 * (s + 1.0)) * (sup_weight(lam) * (d.A + M) + sup_weight(mu) * (M + d.B));
}

double t34_qgt1(const EndpointData& d, double M, double lam, double mu, double s, double q) {
    return d.width / 4.0 * std::pow(1.0 / (s + 1.0), 1.0 / q) *
           (conj_block(lam, d.A + M, q) +
            conj_block(mu, M + d.B, q));
}

}  // namespace

std::span<const BoundCase> all_bound_cases() noexcept { return kCases; }

std::string_view to_string(BoundCase c) noexcept {
    switch (c) {
        case BoundCase::T31_general:
            return "T31_general";
        case BoundCase::T31_s_minus1:
            return "T31_s_minus1";
        case BoundCase::T32_tier1:
            return "T32_tier1";
        case BoundCase::T32_tier2:
            return "T32_tier2";
        case BoundCase::T33_q1:
            return "T33_q1";
        case BoundCase::T33_qgt1:
            return "T33_qgt1";
        case BoundCase::T34_q1_tier1:
            return "T34_q1_tier1";
        case BoundCase::T34_q1_tier2:
            return "T34_q1_tier2";
        case BoundCase::T34_qgt1_tier1:
            return "T34_qgt1_tier1";
        case BoundCase::T34_qgt1_tier2:
            return "T34_qgt1_tier2";
    }
    return "unknown";
}

std::optional<BoundCase> bound_case_from_string(std::string_view id) noexcept {
    for (BoundCase c : kCases) {
        if (to_string(c) == id) {
            return c;
        }
    }
    return std::nullopt;
}

EndpointData endpoint_data(const FunctionSpec& f, double a, double b, double q) {
    auto env = [&](double x) { return std::pow(std::fabs(f.deriv(x)), q); };
    return EndpointData{b - a, env(a), env(b), env(0.5 * (a + b))};
}

void check_branch(BoundCase c, double s, double q) {
    const std::string name(to_string(c));
    if (c == BoundCase::T31_s_minus1) {
        if (s != -1.0) {
            throw BranchError(name + " requires s = -1 exactly");
        }
        return;
    }
    if (!(s >= kSMin)) {
        throw BranchError(name + " requires s > -1 (s >= -1 + 1e-6); use T31_s_minus1 at s = -1");
    }
    switch (c) {
        case BoundCase::T33_q1:
        case BoundCase::T34_q1_tier1:
        case BoundCase::T34_q1_tier2:
            if (!is_q_one(q)) {
                throw BranchError(name + " requires q = 1 (q < 1 + 1e-9)");
            }
            break;
        case BoundCase::T33_qgt1:
        case BoundCase::T34_qgt1_tier1:
        case BoundCase::T34_qgt1_tier2:
            if (is_q_one(q)) {
                throw BranchError(name + " requires q >= 1 + 1e-9");
            }
            break;
        default:
            break;
    }
}

double bound_value(BoundCase c, const EndpointData& d, double lambda, double mu, double s,
                   double q) {
    switch (c) {
        case BoundCase::T31_general:
            return t31_general(d, lambda, mu, s, q);
        case BoundCase::T31_s_minus1:
            return t31_s_minus1(d, q);
        case BoundCase::T32_tier1:
            return t32(d, d.M, lambda, mu, s, q);
        case BoundCase::T32_tier2:
            return t32(d, midpoint_relaxed(d, s), lambda, mu, s, q);
        case BoundCase::T33_q1:
            return t33_q1(d, lambda, mu, s);
        case BoundCase::T33_qgt1:
            return t33_qgt1(d, lambda, mu, s, q);
        case BoundCase::T34_q1_tier1:
            return t34_q1(d, d.M, lambda, mu, s);
        case BoundCase::T34_q1_tier2:
            return t34_q1(d, midpoint_relaxed(d, s), lambda, mu, s);
        case BoundCase::T34_qgt1_tier1:
            return t34_qgt1(d, d.M, lambda, mu, s, q);
        case BoundCase::T34_qgt1_tier2:
            return t34_qgt1(d, midpoint_relaxed(d, s), lambda, mu, s, q);
    }
    return 0.0;
}

std::string_view branch_note(BoundCase c) noexcept {
    switch (c) {
        case BoundCase::T31_general:
            return "power-mean Hölder split with moment closed forms, -1<s<=1";
        case BoundCase::T31_s_minus1:
            return "s=-1: logarithmic moments, midpoint form, lambda and mu ignored";
        case BoundCase::T32_tier1:
            return "endpoint/midpoint split with moment closed forms, uses |f'(m)|^q";
        case BoundCase::T32_tier2:
            return "tier 1 with |f'(m)|^q <= 2^-s(|f'(a)|^q+|f'(b)|^q) substituted";
        case BoundCase::T33_q1:
            return "q=1: sup of |1-lambda-t| and |mu-t| times weight integrals";
        case BoundCase::T33_qgt1:
            return "q>1: conjugate-exponent Hölder split";
        case BoundCase::T34_q1_tier1:
            return "q=1: sup weights, endpoint/midpoint split, uses |f'(m)|";
        case BoundCase::T34_q1_tier2:
            return "q=1 tier 1 with |f'(m)| <= 2^-s(|f'(a)|+|f'(b)|) substituted";
        case BoundCase::T34_qgt1_tier1:
            return "q>1: conjugate-exponent split, endpoint/midpoint, uses |f'(m)|^q";
        case BoundCase::T34_qgt1_tier2:
            return "q>1 tier 1 with |f'(m)|^q <= 2^-s(|f'(a)|^q+|f'(b)|^q) substituted";
    }
    return "";
}

bool is_violation(double slack, double bound) noexcept {
    return slack < -kViolationRel * (1.0 + std::fabs(bound));
}

bool is_violation(const BoundResult& r) noexcept {
    return r.certificate != CertificateStatus::Falsified && is_violation(r.slack, r.bound);
}

ConvexityCertificate envelope_certificate(const FunctionSpec& f, double a, double b, double s,
                                          double q, ConvexitySampling sampling) {
    if (auto p = power_exponent(f.id()); p && *p > 0.0) {
        ConvexityCertificate cert = certify_power_extended_s(*p, q);
        if (cert.certified() && cert.s && *cert.s == s) {
            return cert;
        }
    }
    return check_extended_s_convex(derivative_q_envelope(f, q), Interval{a, b}, s, sampling);
}

BoundResult eval_case(BoundCase c, const FunctionSpec& f, const BoundParams& p, double tol) {
    validate(p);
    check_branch(c, p.s, p.q);
    return eval_case(c, f, p, tol, envelope_certificate(f, p.a, p.b, p.s, p.q));
}

BoundResult eval_case(BoundCase c, const FunctionSpec& f, const BoundParams& p, double tol,
                      const ConvexityCertificate& cert) {
    validate(p);
    check_branch(c, p.s, p.q);
    BoundResult r;
    r.case_id = std::string(to_string(c));
    r.function_id = f.id();
    r.params = RowParams{p.a, p.b, p.lambda, p.mu, p.s, p.q};
    r.certificate = cert.status;
    r.branch_notes = std::string(branch_note(c));
    if (p.a == p.b) {
        r.branch_notes += "; a=b";
        return r;
    }
    if (!f.domain().contains(Interval{p.a, p.b})) {
        throw DomainError("eval_case: [a, b] outside the domain of '" + f.id() + "'");
    }
    r.lhs = c == BoundCase::T31_s_minus1 ? std::fabs(midpoint_lhs(f, p.a, p.b, tol))
                                         : std::fabs(hh_lhs(f, p, tol));
    r.bound = bound_value(c, endpoint_data(f, p.a, p.b, p.q), p.lambda, p.mu, p.s, p.q);
    r.slack = r.bound - r.lhs;
    return r;
}

}  // namespace hh
