#pragma once

#include <optional>
#include <span>
#include <string_view>

#include "hh/bounds.hpp"

namespace hh {

struct MeanParams {
    double a = 1.0;
    double b = 2.0;
    double s = 1.0;
    double q = 1.0;
    double lambda = 1.0;
};

double arithmetic_mean(double a, double b) noexcept;

/// L_s(a, b). Identric for |s| < 1e-8, logarithmic for |s + 1| < 1e-8 and
/// a when |b - a| <= 1e-12 max(a, b). Throws DomainError unless a, b > 0.
double generalized_log_mean(double a, double b, double s);

/// |λ A(a^s, b^s) + (1-λ) A(a, b)^s - L_s(a, b)^s|.
double mean_lhs(const MeanParams& mp);

enum class MeanTheorem { T41, T42, T43_q1, T43_qgt1, T44_q1, T44_qgt1 };

std::span<const MeanTheorem> all_mean_theorems() noexcept;
std::string_view to_string(MeanTheorem t) noexcept;
std::optional<MeanTheorem> mean_theorem_from_string(std::string_view id) noexcept;

/// Case the theorem instantiates with f(x) = x^s and extended-convexity
/// exponent s - 1.
BoundCase mean_root_case(MeanTheorem t) noexcept;

/// Throws ParameterError for a, b <= 0, a > b, s outside (0, 2], λ outside
/// [0, 1] or q < 1; BranchError when the theorem's own constraint fails.
void check_mean_params(MeanTheorem t, const MeanParams& mp);

BoundResult eval_mean_bound(MeanTheorem t, const MeanParams& mp);

}  // namespace hh
