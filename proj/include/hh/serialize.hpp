#pragma once

#include <ostream>
#include <string>
#include <string_view>

#include <json.hpp>

#include "hh/bounds.hpp"
#include "hh/functions.hpp"

namespace hh {

enum class OutputFormat { Json, Csv };

/// "json" or "csv"; throws ParameterError otherwise.
OutputFormat parse_format(std::string_view name);

/// {case, preset, function, params, lhs, bound, slack, certified,
/// certificate, branch_notes}. `preset` is null for plain cases and
/// params.mu is omitted for mean rows.
nlohmann::json to_json(const BoundResult& r);
nlohmann::json to_json(const ConvexityCertificate& c);

std::string csv_header();
std::string csv_row(const BoundResult& r);
std::string csv_escape(std::string_view field);

/// Shortest decimal form that reads back to the same double.
std::string format_double(double x);

}  // namespace hh
