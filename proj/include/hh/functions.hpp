#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>

namespace hh {

struct Interval {
    double lo = 0.0;
    double hi = 0.0;

    bool contains(double x) const noexcept { return x >= lo && x <= hi; }
    bool contains(const Interval& other) const noexcept {
        return other.lo >= lo && other.hi <= hi;
    }
    double width() const noexcept { return hi - lo; }
};

/// A scalar function on a closed interval together with its exact first
/// derivative. Instances are immutable; copies share the callables.
class FunctionSpec {
public:
    using Fn = std::function<double(double)>;

    FunctionSpec(std::string id, Interval domain, Fn eval, std::optional<Fn> deriv);

    const std::string& id() const noexcept { return id_; }
    const Interval& domain() const noexcept { return domain_; }
    bool has_derivative() const noexcept { return deriv_.has_value(); }

    double eval(double x) const { return eval_(x); }
    /// Throws DomainError when the derivative is absent (envelopes).
    double deriv(double x) const;

    /// Same function restricted (or extended) to another interval. The caller
    /// is responsible for the new interval being inside the natural domain.
    FunctionSpec on(Interval domain) const;

private:
    std::string id_;
    Interval domain_;
    Fn eval_;
    std::optional<Fn> deriv_;
};

/// f(x) = x^p on [lo, hi]; requires lo > 0 when p < 1.
FunctionSpec make_power(double p, double lo, double hi);
FunctionSpec make_exp(double lo, double hi);
FunctionSpec make_constant(double c, double lo, double hi);

/// Looks up "pow:<p>", "exp" or "const:<c>" and builds it on [lo, hi].
/// Throws ParameterError for unknown ids.
FunctionSpec make_function(std::string_view id, double lo, double hi);

/// Exponent of a "pow:<p>" id, if `id` names a power function.
std::optional<double> power_exponent(std::string_view id);

/// g(x) = |f'(x)|^q. The result carries no derivative.
FunctionSpec derivative_q_envelope(const FunctionSpec& f, double q);

enum class CertificateStatus { CertifiedAnalytic, NotFalsified, Falsified };
enum class CertificateTarget { Function, DerivativeEnvelope };

std::string_view to_string(CertificateStatus status) noexcept;
std::string_view to_string(CertificateTarget target) noexcept;

struct ConvexityWitness {
    double x = 0.0;
    double y = 0.0;
    double lambda = 0.0;
    double lhs = 0.0;  // g(λx + (1-λ)y)
    double rhs = 0.0;  // λ^s g(x) + (1-λ)^s g(y)
};

/// Claim that a function is extended s-convex on an interval.
///
/// `s` is empty only when the analytic rule declined to name an exponent.
/// A sampling check never yields CertifiedAnalytic: it either finds a
/// witness or reports NotFalsified.
struct ConvexityCertificate {
    std::optional<double> s;
    double q = 1.0;
    CertificateTarget target = CertificateTarget::DerivativeEnvelope;
    CertificateStatus status = CertificateStatus::NotFalsified;
    std::optional<ConvexityWitness> witness;
    std::string provenance;

    bool certified() const noexcept { return status == CertificateStatus::CertifiedAnalytic; }
};

/// Power rule: |f'|^q of f(x) = x^p is extended (p-1)-convex whenever
/// -1 < (p-1)q <= 1 and -1 < p-1 <= 1.
ConvexityCertificate certify_power_extended_s(double p, double q);

struct ConvexitySampling {
    std::size_t samples = 256;
    std::uint64_t seed = 0;
};

/// Tries to falsify g(λx+(1-λ)y) <= λ^s g(x) + (1-λ)^s g(y) on `interval`.
/// Evaluates corner triples, a Halton sequence and seeded random triples,
/// with λ restricted to [1e-6, 1-1e-6]. Throws DomainError if g is not
/// finite or is negative at a sampled point.
ConvexityCertificate check_extended_s_convex(const FunctionSpec& g, Interval interval, double s,
                                             ConvexitySampling sampling = {});

}  // namespace hh
