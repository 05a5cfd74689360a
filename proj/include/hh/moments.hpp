#pragma once

#include <string_view>

namespace hh {

/// Parameters of ∫₀¹ |ξ - t| (ωt + η)^s dt.
struct MomentSpec {
    double xi = 0.0;
    double omega = 1.0;
    double eta = 0.0;
    double s = 0.0;
};

/// Throws ParameterError unless 0 <= ξ <= 1, ω != 0, η >= 0, ω + η >= 0.
void validate(const MomentSpec& m);

/// Closed form of the moment integral. Requires s >= -1 + 1e-6
/// (SingularityError below that; use moment_harmonic at s = -1).
double moment_general(const MomentSpec& m);

/// The four (ω, η) pairs with a dedicated closed form.
enum class MomentCase { Omega1Eta0, Omega1Eta1, OmegaM1Eta1, OmegaM1Eta2 };

MomentCase moment_case_from(double omega, double eta);
double moment_case_omega(MomentCase c) noexcept;
double moment_case_eta(MomentCase c) noexcept;
std::string_view to_string(MomentCase c) noexcept;

/// Dedicated closed form for one of the four special weights. The (-1, 2)
/// form uses (s+2)ξ in its last bracket.
double moment_case(MomentCase c, double xi, double s);

/// The (-1, 2) form exactly as it was first written down, with (s+2)η in
/// place of (s+2)ξ (η = 2). Kept only so the discrepancy can be reported.
double moment_case_m1_2_verbatim(double xi, double s);

/// ∫₀¹ |ξ - t| / (ωt + η) dt via the logarithmic antiderivative. Throws
/// SingularityError when ωt + η vanishes on [0, 1] with a non-integrable
/// pole, ParameterError for ξ outside [0, 1] or ω = 0.
double moment_harmonic(double xi, double omega, double eta);

/// ∫₀¹ |ξ - t|^{q/(q-1)} dt = (q-1)/(2q-1) [ξ^r + (1-ξ)^r], r = (2q-1)/(q-1).
/// Requires q >= 1 + 1e-9 (BranchError otherwise).
double holder_weight_integral(double xi, double q);

/// ∫₀¹ |ξ - t| dt = 1/2 - ξ + ξ².
inline double abs_weight_integral(double xi) noexcept { return 0.5 - xi + xi * xi; }

}  // namespace hh
