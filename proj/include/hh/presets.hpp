#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "hh/bounds.hpp"

namespace hh {

enum class QRequirement { Any, One, GreaterThanOne };

/// How a printed display is supposed to relate to its reference.
enum class Relation {
    Equal,    // algebraically identical
    Relaxes,  // printed value >= reference (a weaker but valid bound)
};

std::string_view to_string(Relation r) noexcept;

/// Parameters a preset fixes. Unpinned values come from the caller.
struct PresetPins {
    std::optional<double> lambda;
    std::optional<double> mu;
    bool mu_equals_lambda = false;
    std::optional<double> s;
    QRequirement q = QRequirement::Any;
    /// Restricts s to (0, 1] instead of [-1 + 1e-6, 1].
    bool s_positive = false;
};

using DisplayFn = std::function<double(const EndpointData&, double lambda, double mu, double s,
                                       double q)>;

struct PresetInfo {
    std::string id;
    /// Theorem case the display belongs to; decides the left-hand side.
    BoundCase root;
    /// What the transcription is compared against: a case id or a preset id.
    std::string reference;
    Relation relation = Relation::Equal;
    PresetPins pins;
    DisplayFn display;
    std::string description;
};

std::span<const PresetInfo> all_presets();
/// Throws ParameterError for unknown ids.
const PresetInfo& find_preset(std::string_view id);

/// Applies the pins to p. Returns nothing when p cannot satisfy them
/// (wrong q branch or s outside the admissible range).
std::optional<BoundParams> pin_params(const PresetInfo& preset, const BoundParams& p);

/// Bound from the verbatim display.
double preset_bound(const PresetInfo& preset, const EndpointData& d, const BoundParams& p);

/// Bound of the preset's reference (case or preset) at the same parameters.
double reference_bound(const PresetInfo& preset, const EndpointData& d, const BoundParams& p);

/// Scaled deviation of the printed display from its reference under the
/// claimed relation: |p - r| / (1 + |r|) for Equal and
/// max(0, r - p) / (1 + |r|) for Relaxes.
double relation_deviation(Relation rel, double printed, double reference) noexcept;

/// Evaluates the display as a bound on f. Throws BranchError when p
/// disagrees with the preset's fixed parameters.
BoundResult eval_preset(const PresetInfo& preset, const FunctionSpec& f, const BoundParams& p,
                        double tol = 1e-12);

struct SpecializationResult {
    double max_deviation = 0.0;
    std::size_t points = 0;
    std::optional<BoundParams> worst;
};

/// Compares display and reference over grid x family after pinning; grid
/// points the preset cannot take and intervals outside a function's
/// domain are skipped.
SpecializationResult check_specialization(const PresetInfo& preset,
                                          std::span<const BoundParams> grid,
                                          std::span<const FunctionSpec> family);

}  // namespace hh
