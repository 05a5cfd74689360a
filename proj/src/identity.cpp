#include "hh/identity.hpp"

#include <array>
#include <cmath>
#include <string>

#include "hh/errors.hpp"
#include "hh/quadrature.hpp"

namespace hh {

namespace {

void require_domain(const FunctionSpec& f, double a, double b) {
    if (!f.domain().contains(Interval{a, b})) {
        throw DomainError("[" + std::to_string(a) + ", " + std::to_string(b) +
                          "] is outside the domain of '" + f.id() + "'");
    }
}

}  // namespace

void validate(const BoundParams& p) {
    if (!std::isfinite(p.a) || !std::isfinite(p.b) || p.a > p.b) {
        throw ParameterError("bound params: need finite a <= b");
    }
    if (!(p.lambda >= 0.0 && p.lambda <= 1.0)) {
        throw ParameterError("bound params: lambda must lie in [0, 1]");
    }
    if (!(p.mu >= 0.0 && p.mu <= 1.0)) {
        throw ParameterError("bound params: mu must lie in [0, 1]");
    }
    if (!(p.s >= -1.0 && p.s <= 1.0)) {
        throw ParameterError("bound params: s must lie in [-1, 1]");
    }
    if (!(p.q >= 1.0) || !std::isfinite(p.q)) {
        throw ParameterError("bound params: q must be finite and >= 1");
    }
}

double hh_lhs(const FunctionSpec& f, const BoundParams& p, double tol) {
    validate(p);
    if (p.a == p.b) {
        return 0.0;
    }
    require_domain(f, p.a, p.b);
    const double m = 0.5 * (p.a + p.b);
    return 0.5 * p.lambda * f.eval(p.a) + 0.5 * p.mu * f.eval(p.b) +
           0.5 * (2.0 - p.lambda - p.mu) * f.eval(m) - mean_integral(f, p.a, p.b, tol);
}

double midpoint_lhs(const FunctionSpec& f, double a, double b, double tol) {
    if (!std::isfinite(a) || !std::isfinite(b) || a > b) {
        throw ParameterError("midpoint_lhs: need finite a <= b");
    }
    if (a == b) {
        return 0.0;
    }
    require_domain(f, a, b);
    return f.eval(0.5 * (a + b)) - mean_integral(f, a, b, tol);
}

double identity_rhs(const FunctionSpec& f, const BoundParams& p, double tol) {
    validate(p);
    if (p.a == p.b) {
        return 0.0;
    }
    require_domain(f, p.a, p.b);
    const double a = p.a;
    const double b = p.b;
    const double m = 0.5 * (a + b);
    const double lam = p.lambda;
    const double mu = p.mu;
    auto integrand = [&](double t) {
        return (1.0 - lam - t) * f.deriv(t * a + (1.0 - t) * m) +
               (mu - t) * f.deriv(t * m + (1.0 - t) * b);
    };
    const std::array<double, 2> breaks{1.0 - lam, mu};
    const QuadResult r = integrate(integrand, 0.0, 1.0, tol, breaks);
    if (!r.converged) {
        throw QuadratureError("identity_rhs: quadrature did not converge for '" + f.id() + "'");
    }
    return 0.25 * (b - a) * r.value;
}

double check_identity(const FunctionSpec& f, const BoundParams& p, double tol) {
    return std::fabs(hh_lhs(f, p, tol) - identity_rhs(f, p, tol));
}

}  // namespace hh
