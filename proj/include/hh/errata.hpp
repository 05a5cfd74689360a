#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include <json.hpp>

namespace hh {

enum class ErratumClass { Consistent, ErratumConfirmed };

std::string_view to_string(ErratumClass c) noexcept;

/// Deviations above this are reported as errata.
inline constexpr double kErratumThreshold = 1e-12;

/// One transcription compared with its derivation path.
struct ErratumItem {
    std::string id;
    std::string reference;
    std::string relation;  // "equal" or "relaxes"
    double max_deviation = 0.0;
    std::size_t points = 0;
    ErratumClass classification = ErratumClass::Consistent;
    nlohmann::json worst;  // parameters of the largest deviation, or null
};

nlohmann::json to_json(const ErratumItem& item);

/// Moment special cases (and the verbatim (-1, 2) form) against
/// moment_general on a 50 x 50 (ξ, s) grid, then every preset against its
/// reference on the canonical λ, μ, s, q grid for x^2 on [0, 1], x^3 on
/// [1/2, 2] and e^x on [-1, 3/2]. Sorted by id.
std::vector<ErratumItem> scan_errata();

}  // namespace hh
