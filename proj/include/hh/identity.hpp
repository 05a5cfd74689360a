#pragma once

#include "hh/functions.hpp"

namespace hh {

/// The tuple (a, b, λ, μ, s, q) shared by every bound.
struct BoundParams {
    double a = 0.0;
    double b = 1.0;
    double lambda = 1.0;
    double mu = 1.0;
    double s = 1.0;
    double q = 1.0;
};

/// Throws ParameterError unless a <= b, λ, μ in [0, 1], s in [-1, 1], q >= 1.
void validate(const BoundParams& p);

/// Signed weighted combination
///   λf(a)/2 + μf(b)/2 + (2-λ-μ)/2 · f((a+b)/2) - (1/(b-a)) ∫ₐᵇ f.
/// Returns 0 when a = b.
double hh_lhs(const FunctionSpec& f, const BoundParams& p, double tol = 1e-12);

/// Signed midpoint difference f((a+b)/2) - (1/(b-a)) ∫ₐᵇ f; 0 when a = b.
double midpoint_lhs(const FunctionSpec& f, double a, double b, double tol = 1e-12);

/// (b-a)/4 ∫₀¹ [(1-λ-t) f'(ta + (1-t)m) + (μ-t) f'(tm + (1-t)b)] dt,
/// m = (a+b)/2, integrated with breakpoints at t = 1-λ and t = μ.
double identity_rhs(const FunctionSpec& f, const BoundParams& p, double tol = 1e-12);

/// |hh_lhs - identity_rhs|.
double check_identity(const FunctionSpec& f, const BoundParams& p, double tol = 1e-12);

}  // namespace hh
