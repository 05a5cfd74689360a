#pragma once

#include <cstddef>
#include <functional>
#include <span>
#include <vector>

#include "hh/functions.hpp"

namespace hh {

struct QuadResult {
    double value = 0.0;
    double err_estimate = 0.0;
    std::size_t evaluations = 0;
    bool converged = false;
};

struct QuadOptions {
    /// Target is max(rel_tol * |value|, abs_tol).
    double rel_tol = 1e-12;
    double abs_tol = 1e-14;
    /// Initial partition points; kinks and branch points of the integrand.
    std::vector<double> breakpoints;
    /// Grade the first/last panel geometrically (ratio 0.25) toward an
    /// integrable endpoint singularity. Resolution toward an endpoint x0 stops
    /// once panels shrink below the floating-point spacing at x0, so put
    /// singularities at 0 when full accuracy is needed.
    bool singular_lo = false;
    bool singular_hi = false;
    std::size_t max_panels = std::size_t{1} << 20;
};

/// Adaptive Gauss-Kronrod (7/15) integration of f over [a, b].
///
/// Panels are refined by bisecting the one with the largest |K15 - G7|
/// until the summed estimate meets the target. When the panel budget runs
/// out the result is returned with converged = false. Throws
/// ParameterError for a > b, a bad tolerance or breakpoints outside [a, b],
/// and QuadratureError when f returns a non-finite sample.
QuadResult integrate(const std::function<double(double)>& f, double a, double b,
                     const QuadOptions& options);

QuadResult integrate(const std::function<double(double)>& f, double a, double b, double tol,
                     std::span<const double> breakpoints = {});

/// (1/(b-a)) * integral of f over [a, b]. Requires a < b inside f's domain.
double mean_integral(const FunctionSpec& f, double a, double b, double tol = 1e-12);

}  // namespace hh
