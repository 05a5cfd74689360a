#include "hh/serialize.hpp"

#include <charconv>
#include <cmath>

#include "hh/errors.hpp"

namespace hh {

OutputFormat parse_format(std::string_view name) {
    if (name == "json") {
        return OutputFormat::Json;
    }
    if (name == "csv") {
        return OutputFormat::Csv;
    }
    throw ParameterError("unknown format '" + std::string(name) + "' (expected json or csv)");
}

nlohmann::json to_json(const BoundResult& r) {
    nlohmann::json params{{"a", r.params.a},
                          {"b", r.params.b},
                          {"lambda", r.params.lambda},
                          {"s", r.params.s},
                          {"q", r.params.q}};
    if (r.params.mu) {
        params["mu"] = *r.params.mu;
    }
    return nlohmann::json{
        {"case", r.case_id},
        {"preset", r.preset.empty() ? nlohmann::json(nullptr) : nlohmann::json(r.preset)},
        {"function", r.function_id},
        {"params", params},
        {"lhs", r.lhs},
        {"bound", r.bound},
        {"slack", r.slack},
        {"certified", r.certified()},
        {"certificate", std::string(to_string(r.certificate))},
        {"branch_notes", r.branch_notes},
    };
}

nlohmann::json to_json(const ConvexityCertificate& c) {
    nlohmann::json j{
        {"status", std::string(to_string(c.status))},
        {"target", std::string(to_string(c.target))},
        {"q", c.q},
        {"s", c.s ? nlohmann::json(*c.s) : nlohmann::json(nullptr)},
        {"provenance", c.provenance},
    };
    if (c.witness) {
        j["witness"] = {{"x", c.witness->x},
                        {"y", c.witness->y},
                        {"lambda", c.witness->lambda},
                        {"lhs", c.witness->lhs},
                        {"rhs", c.witness->rhs}};
    }
    return j;
}

std::string format_double(double x) {
    if (std::isnan(x)) {
        return "nan";
    }
    if (std::isinf(x)) {
        return x > 0 ? "inf" : "-inf";
    }
    char buf[32];
    auto res = std::to_chars(buf, buf + sizeof buf, x);
    return std::string(buf, res.ptr);
}

std::string csv_escape(std::string_view field) {
    if (field.find_first_of(",\"\n\r") == std::string_view::npos) {
        return std::string(field);
    }
    std::string out = "\"";
    for (char c : field) {
        if (c == '"') {
            out += '"';
        }
        out += c;
    }
    out += '"';
    return out;
}

std::string csv_header() {
    return "case,preset,a,b,lambda,mu,s,q,lhs,bound,slack,certified,branch_notes,function";
}

std::string csv_row(const BoundResult& r) {
    const RowParams& p = r.params;
    std::string row;
    row += csv_escape(r.case_id) + ',';
    row += csv_escape(r.preset) + ',';
    row += format_double(p.a) + ',' + format_double(p.b) + ',' + format_double(p.lambda) + ',';
    row += (p.mu ? format_double(*p.mu) : std::string()) + ',';
    row += format_double(p.s) + ',' + format_double(p.q) + ',';
    row += format_double(r.lhs) + ',' + format_double(r.bound) + ',' + format_double(r.slack) + ',';
    row += r.certified() ? "true," : "false,";
    row += csv_escape(r.branch_notes) + ',';
    row += csv_escape(r.function_id);
    return row;
}

}  // namespace hh
