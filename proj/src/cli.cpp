#include "hh/cli.hpp"

#include <cmath>
#include <fstream>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "hh/bounds.hpp"
#include "hh/errors.hpp"
#include "hh/harness.hpp"
#include "hh/identity.hpp"
#include "hh/means.hpp"
#include "hh/moments.hpp"
#include "hh/presets.hpp"
#include "hh/serialize.hpp"

namespace hh {

namespace {

using json = nlohmann::json;

constexpr int kOk = 0;
constexpr int kViolation = 1;
constexpr int kUsage = 2;
constexpr int kQuadrature = 3;

// Flat key/value output: a JSON object, or a two-line CSV.
void emit_flat(std::ostream& out, OutputFormat fmt, const std::vector<std::pair<std::string, json>>& kv) {
    if (fmt == OutputFormat::Json) {
        json j = json::object();
        for (const auto& [k, v] : kv) {
            j[k] = v;
        }
        out << j.dump(2) << '\n';
        return;
    }
    std::string header;
    std::string row;
    for (std::size_t i = 0; i < kv.size(); ++i) {
        const json& v = kv[i].second;
        header += (i ? "," : "") + kv[i].first;
        std::string cell;
        if (v.is_number_float()) {
            cell = format_double(v.get<double>());
        } else if (v.is_string()) {
            cell = v.get<std::string>();
        } else if (!v.is_null()) {
            cell = v.dump();
        }
        row += (i ? "," : "") + csv_escape(cell);
    }
    out << header << '\n' << row << '\n';
}

int emit_result(std::ostream& out, OutputFormat fmt, const BoundResult& r) {
    if (fmt == OutputFormat::Json) {
        out << to_json(r).dump(2) << '\n';
    } else {
        out << csv_header() << '\n' << csv_row(r) << '\n';
    }
    return is_violation(r) ? kViolation : kOk;
}

struct BoundFlags {
    std::string f = "pow:2";
    double a = 0.0;
    double b = 1.0;
    std::optional<double> lambda;
    std::optional<double> mu;
    std::optional<double> s;
    std::optional<double> q;
};

void add_bound_flags(CLI::App* cmd, BoundFlags& flags) {
    cmd->add_option("--f", flags.f, "function id: pow:<p>, exp or const:<c>")->capture_default_str();
    cmd->add_option("--a", flags.a, "left endpoint")->capture_default_str();
    cmd->add_option("--b", flags.b, "right endpoint")->capture_default_str();
    cmd->add_option("--lambda", flags.lambda, "weight at a, in [0, 1] (default 1)");
    cmd->add_option("--mu", flags.mu, "weight at b, in [0, 1] (default 1)");
    cmd->add_option("--s", flags.s, "extended convexity exponent (default 1)");
    cmd->add_option("--q", flags.q, "power q >= 1 (default 1)");
}

BoundParams to_params(const BoundFlags& f) {
    return BoundParams{f.a, f.b, f.lambda.value_or(1.0), f.mu.value_or(1.0), f.s.value_or(1.0),
                       f.q.value_or(1.0)};
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Numerical verification of Hermite-Hadamard type bounds for extended s-convex functions",
                 "hh-verify"};
    app.require_subcommand(1);
    std::string format_name = "json";
    app.add_option("--format", format_name, "output format: json or csv")
        ->check(CLI::IsMember({"json", "csv"}))
        ->capture_default_str();
    bool format_given = false;

    MomentSpec moment;
    auto* moment_cmd = app.add_subcommand("moment", "closed-form moment integral with a quadrature check");
    moment_cmd->add_option("--xi", moment.xi, "xi in [0, 1]")->required();
    moment_cmd->add_option("--omega", moment.omega, "omega (nonzero)")->capture_default_str();
    moment_cmd->add_option("--eta", moment.eta, "eta >= 0")->capture_default_str();
    moment_cmd->add_option("--s", moment.s, "exponent s >= -1 + 1e-6")->required();

    MomentSpec harmonic;
    auto* harmonic_cmd = app.add_subcommand("harmonic", "moment integral at s = -1");
    harmonic_cmd->add_option("--xi", harmonic.xi, "xi in [0, 1]")->required();
    harmonic_cmd->add_option("--omega", harmonic.omega, "omega (nonzero)")->capture_default_str();
    harmonic_cmd->add_option("--eta", harmonic.eta, "eta >= 0")->capture_default_str();

    BoundFlags ident;
    auto* identity_cmd = app.add_subcommand("identity", "weighted identity: left side vs integral form");
    add_bound_flags(identity_cmd, ident);

    BoundFlags bound;
    std::string case_id;
    auto* bound_cmd = app.add_subcommand("bound", "evaluate one theorem bound");
    bound_cmd->add_option("--case", case_id, "bound case id")->required();
    add_bound_flags(bound_cmd, bound);

    BoundFlags preset;
    std::string preset_id;
    auto* preset_cmd = app.add_subcommand("preset", "evaluate a corollary display; unset parameters take its fixed values");
    preset_cmd->add_option("--id", preset_id, "preset id")->required();
    add_bound_flags(preset_cmd, preset);

    MeanParams mp;
    std::string theorem_id;
    auto* means_cmd = app.add_subcommand("means", "mean inequality for f(x) = x^s");
    means_cmd->add_option("--theorem", theorem_id, "T41, T42, T43_q1, T43_qgt1, T44_q1 or T44_qgt1")->required();
    means_cmd->add_option("--a", mp.a, "a > 0")->required();
    means_cmd->add_option("--b", mp.b, "b >= a")->required();
    means_cmd->add_option("--s", mp.s, "s in (0, 2]")->required();
    means_cmd->add_option("--q", mp.q, "q >= 1")->capture_default_str();
    means_cmd->add_option("--lambda", mp.lambda, "lambda in [0, 1]")->capture_default_str();

    std::string cert_f;
    double cert_q = 1.0;
    std::optional<double> cert_s;
    double cert_a = 0.5;
    double cert_b = 2.0;
    auto* certify_cmd = app.add_subcommand("certify", "extended s-convexity certificate for |f'|^q");
    certify_cmd->add_option("--f", cert_f, "function id")->required();
    certify_cmd->add_option("--q", cert_q, "q >= 1")->capture_default_str();
    certify_cmd->add_option("--s", cert_s, "exponent to sample against (default: power rule only)");
    certify_cmd->add_option("--a", cert_a, "sampling interval start")->capture_default_str();
    certify_cmd->add_option("--b", cert_b, "sampling interval end")->capture_default_str();

    std::string config_path;
    std::string out_path;
    auto* sweep_cmd = app.add_subcommand("sweep", "run a suite from a JSON config");
    sweep_cmd->add_option("--config", config_path, "suite config file")->required();
    sweep_cmd->add_option("--out", out_path, "report path (default: standard output)");

    auto* errata_cmd = app.add_subcommand("errata", "compare every printed display with its derivation");

    for (CLI::App* sub : app.get_subcommands({})) {
        sub->add_option("--format", format_name, "output format: json or csv")
            ->check(CLI::IsMember({"json", "csv"}));
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kOk : kUsage;
    }
    for (CLI::App* sub : app.get_subcommands()) {
        if (sub->count("--format") > 0) {
            format_given = true;
        }
    }
    format_given = format_given || app.count("--format") > 0;
    const OutputFormat fmt = parse_format(format_name);

    try {
        if (moment_cmd->parsed()) {
            const double value = moment_general(moment);
            const double quad = moment_by_quadrature(moment);
            emit_flat(out, fmt,
                      {{"xi", moment.xi},
                       {"omega", moment.omega},
                       {"eta", moment.eta},
                       {"s", moment.s},
                       {"value", value},
                       {"quadrature", quad},
                       {"oracle_residual", std::fabs(value - quad) / std::max(std::fabs(quad), 1e-300)}});
            return kOk;
        }
        if (harmonic_cmd->parsed()) {
            emit_flat(out, fmt,
                      {{"xi", harmonic.xi},
                       {"omega", harmonic.omega},
                       {"eta", harmonic.eta},
                       {"value", moment_harmonic(harmonic.xi, harmonic.omega, harmonic.eta)}});
            return kOk;
        }
        if (identity_cmd->parsed()) {
            const BoundParams p = to_params(ident);
            const FunctionSpec f = make_function(ident.f, p.a, p.b);
            const double lhs = hh_lhs(f, p);
            const double rhs = identity_rhs(f, p);
            emit_flat(out, fmt,
                      {{"function", f.id()},
                       {"a", p.a},
                       {"b", p.b},
                       {"lambda", p.lambda},
                       {"mu", p.mu},
                       {"lhs", lhs},
                       {"rhs", rhs},
                       {"residual", std::fabs(lhs - rhs)}});
            return kOk;
        }
        if (bound_cmd->parsed()) {
            const auto c = bound_case_from_string(case_id);
            if (!c) {
                throw ParameterError("unknown case '" + case_id + "'");
            }
            const BoundParams p = to_params(bound);
            return emit_result(out, fmt, eval_case(*c, make_function(bound.f, p.a, p.b), p));
        }
        if (preset_cmd->parsed()) {
            const PresetInfo& info = find_preset(preset_id);
            const PresetPins& pins = info.pins;
            BoundParams p = to_params(preset);
            if (!preset.lambda && pins.lambda) p.lambda = *pins.lambda;
            if (!preset.mu && pins.mu) p.mu = *pins.mu;
            if (!preset.mu && pins.mu_equals_lambda) p.mu = p.lambda;
            if (!preset.s && pins.s) p.s = *pins.s;
            if (!preset.q && pins.q == QRequirement::GreaterThanOne) p.q = 2.0;
            return emit_result(out, fmt, eval_preset(info, make_function(preset.f, p.a, p.b), p));
        }
        if (means_cmd->parsed()) {
            const auto t = mean_theorem_from_string(theorem_id);
            if (!t) {
                throw ParameterError("unknown theorem '" + theorem_id + "'");
            }
            return emit_result(out, fmt, eval_mean_bound(*t, mp));
        }
        if (certify_cmd->parsed()) {
            ConvexityCertificate cert;
            const auto p = power_exponent(cert_f);
            if (p && !cert_s) {
                cert = certify_power_extended_s(*p, cert_q);
            } else {
                if (!cert_s) {
                    throw ParameterError("certify: --s is required for non-power functions");
                }
                const FunctionSpec f = make_function(cert_f, cert_a, cert_b);
                cert = envelope_certificate(f, cert_a, cert_b, *cert_s, cert_q);
            }
            json j = to_json(cert);
            j["function"] = cert_f;
            if (fmt == OutputFormat::Json) {
                out << j.dump(2) << '\n';
            } else {
                emit_flat(out, fmt,
                          {{"function", cert_f},
                           {"status", j["status"]},
                           {"target", j["target"]},
                           {"s", j["s"]},
                           {"q", cert_q},
                           {"provenance", j["provenance"]}});
            }
            return kOk;
        }
        if (sweep_cmd->parsed()) {
            const SuiteConfig cfg = load_config(config_path);
            const OutputFormat sweep_fmt = format_given ? fmt : cfg.format;
            Report r;
            if (out_path.empty()) {
                r = stream_suite(cfg, out, sweep_fmt);
            } else {
                std::ofstream file(out_path, std::ios::binary);
                if (!file) {
                    throw ParameterError("cannot open '" + out_path + "' for writing");
                }
                r = stream_suite(cfg, file, sweep_fmt);
            }
            if (!r.violations.empty()) {
                err << r.violations.size() << " violation(s) in " << r.record_count << " records\n";
                return kViolation;
            }
            return kOk;
        }
        if (errata_cmd->parsed()) {
            const Report r = erratum_scan();
            if (fmt == OutputFormat::Json) {
                write_report(out, r, fmt);
            } else {
                out << "id,reference,relation,max_deviation,points,classification\n";
                for (const ErratumItem& e : r.errata) {
                    out << csv_escape(e.id) << ',' << csv_escape(e.reference) << ',' << e.relation << ','
                        << format_double(e.max_deviation) << ',' << e.points << ','
                        << to_string(e.classification) << '\n';
                }
            }
            return kOk;
        }
    } catch (const QuadratureError& e) {
        err << "error: " << e.what() << '\n';
        return kQuadrature;
    } catch (const ConfigError& e) {
        err << "config error: " << e.what() << '\n';
        return kUsage;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << '\n';
        return kUsage;
    } catch (const std::domain_error& e) {
        err << "error: " << e.what() << '\n';
        return kUsage;
    }
    return kUsage;
}

}  // namespace hh
