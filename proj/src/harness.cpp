#include "hh/harness.hpp"

#include <algorithm>
#include <atomic>
#include <charconv>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <map>
#include <ostream>
#include <random>
#include <set>
#include <thread>
#include <tuple>

#include "hh/errors.hpp"
#include "hh/identity.hpp"
#include "hh/moments.hpp"
#include "hh/presets.hpp"
#include "hh/quadrature.hpp"

namespace hh {

namespace {

using json = nlohmann::json;

constexpr std::size_t kChunk = 1024;

// ---------------------------------------------------------------- config

double as_number(const json& j, const std::string& path) {
    if (!j.is_number()) {
        throw ConfigError(path, "expected a number");
    }
    const double v = j.get<double>();
    if (!std::isfinite(v)) {
        throw ConfigError(path, "expected a finite number");
    }
    return v;
}

std::size_t as_count(const json& j, const std::string& path) {
    if (!j.is_number_integer() || j.get<long long>() < 0) {
        throw ConfigError(path, "expected a nonnegative integer");
    }
    return j.get<std::size_t>();
}

bool as_bool(const json& j, const std::string& path) {
    if (!j.is_boolean()) {
        throw ConfigError(path, "expected true or false");
    }
    return j.get<bool>();
}

std::vector<double> number_list(const json& j, const std::string& path) {
    if (j.is_number()) {
        return {as_number(j, path)};
    }
    if (!j.is_array()) {
        throw ConfigError(path, "expected a number or an array of numbers");
    }
    std::vector<double> out;
    for (std::size_t i = 0; i < j.size(); ++i) {
        out.push_back(as_number(j[i], path + "[" + std::to_string(i) + "]"));
    }
    return out;
}

std::pair<double, double> range(const json& j, const std::string& path) {
    const std::vector<double> v = number_list(j, path);
    if (v.size() != 2 || v[0] > v[1]) {
        throw ConfigError(path, "expected [lo, hi] with lo <= hi");
    }
    return {v[0], v[1]};
}

void reject_unknown(const json& obj, const std::set<std::string>& known, const std::string& prefix) {
    for (const auto& [key, value] : obj.items()) {
        if (!known.count(key)) {
            throw ConfigError(prefix + key, "unknown field");
        }
    }
}

const json& object_at(const json& j, const std::string& path) {
    if (!j.is_object()) {
        throw ConfigError(path, "expected an object");
    }
    return j;
}

std::vector<std::string> id_list(const json& j, const std::string& path) {
    if (j.is_string()) {
        return {j.get<std::string>()};
    }
    if (!j.is_array()) {
        throw ConfigError(path, "expected \"all\" or an array of ids");
    }
    std::vector<std::string> out;
    for (std::size_t i = 0; i < j.size(); ++i) {
        if (!j[i].is_string()) {
            throw ConfigError(path + "[" + std::to_string(i) + "]", "expected a string");
        }
        out.push_back(j[i].get<std::string>());
    }
    return out;
}

GridSpec parse_grid(const json& j) {
    object_at(j, "grid");
    reject_unknown(j, {"a", "b", "lambda", "mu", "s", "q"}, "grid.");
    GridSpec g;
    if (j.contains("a")) g.a = number_list(j["a"], "grid.a");
    if (j.contains("b")) g.b = number_list(j["b"], "grid.b");
    if (j.contains("lambda")) g.lambda = number_list(j["lambda"], "grid.lambda");
    if (j.contains("mu")) g.mu = number_list(j["mu"], "grid.mu");
    if (j.contains("q")) g.q = number_list(j["q"], "grid.q");
    if (j.contains("s")) {
        const json& s = j["s"];
        g.s.clear();
        const json arr = s.is_array() ? s : json::array({s});
        for (std::size_t i = 0; i < arr.size(); ++i) {
            const std::string path = s.is_array() ? "grid.s[" + std::to_string(i) + "]" : "grid.s";
            if (arr[i].is_string()) {
                if (arr[i].get<std::string>() != "auto") {
                    throw ConfigError(path, "expected a number or \"auto\"");
                }
                g.s.emplace_back(std::nullopt);
            } else {
                g.s.emplace_back(as_number(arr[i], path));
            }
        }
    }
    return g;
}

MeansSpec parse_means(const json& j) {
    object_at(j, "means");
    reject_unknown(j, {"theorems", "a", "b", "s", "q", "lambda", "draws"}, "means.");
    MeansSpec m;
    if (j.contains("theorems")) {
        const std::vector<std::string> ids = id_list(j["theorems"], "means.theorems");
        if (ids.size() == 1 && ids[0] == "all") {
            m.theorems.assign(all_mean_theorems().begin(), all_mean_theorems().end());
        } else {
            for (std::size_t i = 0; i < ids.size(); ++i) {
                auto t = mean_theorem_from_string(ids[i]);
                if (!t) {
                    throw ConfigError("means.theorems[" + std::to_string(i) + "]",
                                      "unknown theorem '" + ids[i] + "'");
                }
                m.theorems.push_back(*t);
            }
        }
    }
    if (j.contains("a")) m.a = number_list(j["a"], "means.a");
    if (j.contains("b")) m.b = number_list(j["b"], "means.b");
    if (j.contains("s")) m.s = number_list(j["s"], "means.s");
    if (j.contains("q")) m.q = number_list(j["q"], "means.q");
    if (j.contains("lambda")) m.lambda = number_list(j["lambda"], "means.lambda");
    if (j.contains("draws")) {
        const json& d = object_at(j["draws"], "means.draws");
        reject_unknown(d, {"count", "a", "width", "q_max"}, "means.draws.");
        if (d.contains("count")) m.draws = as_count(d["count"], "means.draws.count");
        if (d.contains("a")) std::tie(m.a_lo, m.a_hi) = range(d["a"], "means.draws.a");
        if (d.contains("width")) std::tie(m.width_lo, m.width_hi) = range(d["width"], "means.draws.width");
        if (d.contains("q_max")) m.q_hi = as_number(d["q_max"], "means.draws.q_max");
        if (!(m.a_lo > 0.0)) {
            throw ConfigError("means.draws.a", "lower end must be positive");
        }
        if (m.width_lo < 0.0) {
            throw ConfigError("means.draws.width", "lower end must be nonnegative");
        }
        if (!(m.q_hi >= 1.0)) {
            throw ConfigError("means.draws.q_max", "must be >= 1");
        }
    }
    return m;
}

// ---------------------------------------------------------------- sampling

class Uniform {
public:
    explicit Uniform(std::uint64_t seed) : gen_(seed) {}
    double operator()() { return static_cast<double>(gen_() >> 11) * 0x1.0p-53; }
    double in(double lo, double hi) { return lo + (hi - lo) * (*this)(); }
    std::size_t index(std::size_t n) { return static_cast<std::size_t>(gen_() % n); }

private:
    std::mt19937_64 gen_;
};

// ---------------------------------------------------------------- tasks

enum class TaskKind { Case, Preset, Mean };

struct Task {
    TaskKind kind = TaskKind::Case;
    std::string case_id;
    std::string preset;
    std::string function;
    BoundParams p;
    BoundCase bound_case = BoundCase::T31_general;
    MeanTheorem theorem = MeanTheorem::T41;

    auto key() const {
        return std::tie(case_id, preset, function, p.a, p.b, p.lambda, p.mu, p.s, p.q);
    }
};

struct RawTuple {
    double a;
    double b;
    double lambda;
    double mu;
    std::optional<double> s;
    double q;
};

std::vector<RawTuple> bound_tuples(const SuiteConfig& cfg) {
    std::vector<RawTuple> out;
    if (cfg.grid) {
        const GridSpec& g = *cfg.grid;
        const std::vector<double> mus = cfg.lambda_eq_mu ? std::vector<double>{0.0} : g.mu;
        for (double a : g.a)
            for (double b : g.b)
                for (double l : g.lambda)
                    for (double u : mus)
                        for (const auto& s : g.s)
                            for (double q : g.q) {
                                out.push_back({a, b, l, cfg.lambda_eq_mu ? l : u, s, q});
                            }
    }
    if (cfg.draws.count > 0) {
        const GridSpec g = cfg.grid.value_or(GridSpec{});
        Uniform u(cfg.seed);
        for (std::size_t i = 0; i < cfg.draws.count; ++i) {
            const double a = u.in(cfg.draws.a_lo, cfg.draws.a_hi);
            const double b = a + u.in(cfg.draws.width_lo, cfg.draws.width_hi);
            const double l = u();
            const double m = cfg.lambda_eq_mu ? l : u();
            const auto s = g.s.empty() ? std::optional<double>{} : g.s[u.index(g.s.size())];
            const double q = g.q.empty() ? 1.0 : g.q[u.index(g.q.size())];
            out.push_back({a, b, l, m, s, q});
        }
    }
    return out;
}

double resolve_s(const std::optional<double>& s, const std::string& function) {
    if (s) {
        return *s;
    }
    if (auto p = power_exponent(function)) {
        return *p - 1.0;
    }
    return 1.0;
}

bool admissible(const std::string& function, const BoundParams& p) {
    try {
        validate(p);
        make_function(function, p.a, p.b);
        return true;
    } catch (const std::exception&) {
        return false;
    }
}

std::vector<MeanParams> mean_tuples(const SuiteConfig& cfg) {
    const MeansSpec& m = cfg.means;
    std::vector<MeanParams> out;
    for (double a : m.a)
        for (double b : m.b)
            for (double s : m.s)
                for (double q : m.q)
                    for (double l : m.lambda) {
                        out.push_back({a, b, s, q, l});
                    }
    Uniform u(cfg.seed ^ 0x9e3779b97f4a7c15ULL);
    for (std::size_t i = 0; i < m.draws; ++i) {
        const double a = u.in(m.a_lo, m.a_hi);
        const double b = a + u.in(m.width_lo, m.width_hi);
        const double s = 2.0 * (1.0 - u());
        const double q = i % 2 == 0 ? 1.0 : u.in(1.0, m.q_hi);
        out.push_back({a, b, s, q, u()});
    }
    return out;
}

std::vector<Task> build_tasks(const SuiteConfig& cfg, std::size_t& skipped) {
    std::vector<Task> tasks;
    const std::vector<RawTuple> tuples = bound_tuples(cfg);
    std::vector<const PresetInfo*> presets;
    for (const std::string& id : cfg.presets) {
        presets.push_back(&find_preset(id));
    }
    for (const std::string& fn : cfg.functions) {
        for (const RawTuple& t : tuples) {
            const BoundParams p{t.a, t.b, t.lambda, t.mu, resolve_s(t.s, fn), t.q};
            const bool ok = admissible(fn, p);
            for (BoundCase c : cfg.cases) {
                bool fits = ok;
                if (fits) {
                    try {
                        check_branch(c, p.s, p.q);
                    } catch (const BranchError&) {
                        fits = false;
                    }
                }
                if (!fits) {
                    ++skipped;
                    continue;
                }
                Task task;
                task.kind = TaskKind::Case;
                task.case_id = std::string(to_string(c));
                task.function = fn;
                task.p = p;
                task.bound_case = c;
                tasks.push_back(std::move(task));
            }
            for (const PresetInfo* pr : presets) {
                const std::optional<BoundParams> pinned = ok ? pin_params(*pr, p) : std::nullopt;
                if (!pinned || !admissible(fn, *pinned)) {
                    ++skipped;
                    continue;
                }
                Task task;
                task.kind = TaskKind::Preset;
                task.case_id = std::string(to_string(pr->root));
                task.preset = pr->id;
                task.function = fn;
                task.p = *pinned;
                tasks.push_back(std::move(task));
            }
        }
    }
    for (const MeanParams& mp : mean_tuples(cfg)) {
        for (MeanTheorem t : cfg.means.theorems) {
            try {
                check_mean_params(t, mp);
            } catch (const std::exception&) {
                ++skipped;
                continue;
            }
            Task task;
            task.kind = TaskKind::Mean;
            task.case_id = std::string(to_string(t));
            task.p = BoundParams{mp.a, mp.b, mp.lambda, mp.lambda, mp.s, mp.q};
            task.theorem = t;
            tasks.push_back(std::move(task));
        }
    }
    std::sort(tasks.begin(), tasks.end(), [](const Task& x, const Task& y) { return x.key() < y.key(); });
    // Presets pin parameters, so distinct grid points can collapse onto one row.
    tasks.erase(std::unique(tasks.begin(), tasks.end(),
                            [](const Task& x, const Task& y) { return x.key() == y.key(); }),
                tasks.end());
    return tasks;
}

std::optional<BoundResult> evaluate(const Task& t, const SuiteConfig& cfg) {
    try {
        switch (t.kind) {
            case TaskKind::Case: {
                const FunctionSpec f = make_function(t.function, t.p.a, t.p.b);
                const ConvexityCertificate cert = envelope_certificate(
                    f, t.p.a, t.p.b, t.p.s, t.p.q, ConvexitySampling{cfg.samples, cfg.seed});
                return eval_case(t.bound_case, f, t.p, cfg.tolerance, cert);
            }
            case TaskKind::Preset:
                return eval_preset(find_preset(t.preset), make_function(t.function, t.p.a, t.p.b), t.p,
                                   cfg.tolerance);
            case TaskKind::Mean:
                return eval_mean_bound(t.theorem, MeanParams{t.p.a, t.p.b, t.p.s, t.p.q, t.p.lambda});
        }
    } catch (const std::exception&) {
    }
    return std::nullopt;
}

void parallel_for(std::size_t n, const std::function<void(std::size_t)>& fn) {
    const std::size_t workers = std::min(worker_threads(), n);
    if (workers <= 1) {
        for (std::size_t i = 0; i < n; ++i) {
            fn(i);
        }
        return;
    }
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (std::size_t w = 0; w < workers; ++w) {
        pool.emplace_back([&] {
            for (std::size_t i = next.fetch_add(1); i < n; i = next.fetch_add(1)) {
                fn(i);
            }
        });
    }
    for (std::thread& t : pool) {
        t.join();
    }
}

// ---------------------------------------------------------------- aggregation

class Aggregator {
public:
    void add(const BoundResult& r) {
        Bucket& b = buckets_[r.preset.empty() ? r.case_id : r.preset];
        b.slacks.push_back(r.slack);
        b.certified += r.certified() ? 1 : 0;
        if (is_violation(r)) {
            ++b.violations;
            violations_.push_back(r);
        }
        ++count_;
    }

    void finish(Report& report) {
        report.record_count = count_;
        report.violations = std::move(violations_);
        for (auto& [key, b] : buckets_) {
            CaseSummary s;
            s.key = key;
            s.rows = b.slacks.size();
            s.certified = b.certified;
            s.violations = b.violations;
            std::sort(b.slacks.begin(), b.slacks.end());
            s.min_slack = b.slacks.front();
            const std::size_t n = b.slacks.size();
            s.median_slack = n % 2 ? b.slacks[n / 2] : 0.5 * (b.slacks[n / 2 - 1] + b.slacks[n / 2]);
            report.summary.push_back(s);
        }
    }

private:
    struct Bucket {
        std::vector<double> slacks;
        std::size_t certified = 0;
        std::size_t violations = 0;
    };
    std::map<std::string, Bucket> buckets_;
    std::vector<BoundResult> violations_;
    std::size_t count_ = 0;
};

Report execute(const SuiteConfig& cfg, const std::function<void(const BoundResult&)>& sink) {
    Report report;
    const std::vector<Task> tasks = build_tasks(cfg, report.skipped);
    Aggregator agg;
    std::vector<std::optional<BoundResult>> results;
    for (std::size_t start = 0; start < tasks.size(); start += kChunk) {
        const std::size_t n = std::min(kChunk, tasks.size() - start);
        results.assign(n, std::nullopt);
        parallel_for(n, [&](std::size_t i) { results[i] = evaluate(tasks[start + i], cfg); });
        for (auto& r : results) {
            if (!r) {
                ++report.failed;
                continue;
            }
            agg.add(*r);
            sink(*r);
        }
    }
    agg.finish(report);
    if (cfg.oracle.moment_draws > 0 || cfg.oracle.identity_draws > 0) {
        report.oracle = run_oracles(cfg.oracle, cfg.seed);
    }
    if (cfg.errata) {
        report.errata = scan_errata();
    }
    return report;
}

// ---------------------------------------------------------------- writing

json summary_json(const Report& r) {
    json cases = json::array();
    for (const CaseSummary& s : r.summary) {
        cases.push_back({{"key", s.key},
                         {"rows", s.rows},
                         {"certified", s.certified},
                         {"violations", s.violations},
                         {"min_slack", s.min_slack},
                         {"median_slack", s.median_slack}});
    }
    return {{"cases", cases},
            {"records", r.record_count},
            {"violations", r.violations.size()},
            {"skipped", r.skipped},
            {"failed", r.failed}};
}

json oracle_json(const std::optional<OracleResiduals>& o) {
    if (!o) {
        return nullptr;
    }
    return {{"moment_general", o->moment_general}, {"moment_case", o->moment_case},
            {"identity", o->identity},             {"holder_weight", o->holder_weight},
            {"moment_points", o->moment_points},   {"identity_points", o->identity_points}};
}

class JsonStream {
public:
    explicit JsonStream(std::ostream& out) : out_(out) { out_ << "{\"records\":["; }

    void record(const BoundResult& r) {
        out_ << (first_ ? "\n" : ",\n") << to_json(r).dump();
        first_ = false;
    }

    void finish(const Report& r) {
        json violations = json::array();
        for (const BoundResult& v : r.violations) {
            violations.push_back(to_json(v));
        }
        json errata = json::array();
        for (const ErratumItem& e : r.errata) {
            errata.push_back(to_json(e));
        }
        out_ << (first_ ? "]" : "\n]");
        out_ << ",\n\"violations\":" << violations.dump();
        out_ << ",\n\"errata\":" << errata.dump();
        out_ << ",\n\"summary\":" << summary_json(r).dump();
        out_ << ",\n\"oracle_residuals\":" << oracle_json(r.oracle).dump() << "}\n";
    }

private:
    std::ostream& out_;
    bool first_ = true;
};

}  // namespace

SuiteConfig parse_config(const json& j) {
    if (!j.is_object()) {
        throw ConfigError("$", "config must be a JSON object");
    }
    reject_unknown(j,
                   {"functions", "grid", "lambda_eq_mu", "draws", "cases", "presets", "means", "oracle",
                    "errata", "tolerance", "seed", "format", "sampling"},
                   "");
    SuiteConfig cfg;
    if (j.contains("functions")) {
        cfg.functions = id_list(j["functions"], "functions");
        for (std::size_t i = 0; i < cfg.functions.size(); ++i) {
            try {
                make_function(cfg.functions[i], 1.0, 2.0);
            } catch (const std::exception& e) {
                throw ConfigError("functions[" + std::to_string(i) + "]", e.what());
            }
        }
    }
    if (j.contains("grid")) {
        cfg.grid = parse_grid(j["grid"]);
    }
    if (j.contains("lambda_eq_mu")) {
        cfg.lambda_eq_mu = as_bool(j["lambda_eq_mu"], "lambda_eq_mu");
    }
    if (j.contains("draws")) {
        const json& d = object_at(j["draws"], "draws");
        reject_unknown(d, {"count", "a", "width"}, "draws.");
        if (d.contains("count")) cfg.draws.count = as_count(d["count"], "draws.count");
        if (d.contains("a")) std::tie(cfg.draws.a_lo, cfg.draws.a_hi) = range(d["a"], "draws.a");
        if (d.contains("width")) {
            std::tie(cfg.draws.width_lo, cfg.draws.width_hi) = range(d["width"], "draws.width");
            if (cfg.draws.width_lo < 0.0) {
                throw ConfigError("draws.width", "lower end must be nonnegative");
            }
        }
    }
    if (j.contains("cases")) {
        const std::vector<std::string> ids = id_list(j["cases"], "cases");
        if (ids.size() == 1 && ids[0] == "all") {
            cfg.cases.assign(all_bound_cases().begin(), all_bound_cases().end());
        } else {
            for (std::size_t i = 0; i < ids.size(); ++i) {
                auto c = bound_case_from_string(ids[i]);
                if (!c) {
                    throw ConfigError("cases[" + std::to_string(i) + "]", "unknown case '" + ids[i] + "'");
                }
                cfg.cases.push_back(*c);
            }
        }
    }
    if (j.contains("presets")) {
        const std::vector<std::string> ids = id_list(j["presets"], "presets");
        if (ids.size() == 1 && ids[0] == "all") {
            for (const PresetInfo& p : all_presets()) {
                cfg.presets.push_back(p.id);
            }
        } else {
            for (std::size_t i = 0; i < ids.size(); ++i) {
                try {
                    find_preset(ids[i]);
                } catch (const ParameterError& e) {
                    throw ConfigError("presets[" + std::to_string(i) + "]", e.what());
                }
                cfg.presets.push_back(ids[i]);
            }
        }
    }
    if (j.contains("means")) {
        cfg.means = parse_means(j["means"]);
    }
    if (j.contains("oracle")) {
        const json& o = object_at(j["oracle"], "oracle");
        reject_unknown(o, {"moment_draws", "identity_draws"}, "oracle.");
        if (o.contains("moment_draws")) cfg.oracle.moment_draws = as_count(o["moment_draws"], "oracle.moment_draws");
        if (o.contains("identity_draws")) {
            cfg.oracle.identity_draws = as_count(o["identity_draws"], "oracle.identity_draws");
        }
    }
    if (j.contains("errata")) {
        cfg.errata = as_bool(j["errata"], "errata");
    }
    if (j.contains("tolerance")) {
        cfg.tolerance = as_number(j["tolerance"], "tolerance");
        if (!(cfg.tolerance > 0.0)) {
            throw ConfigError("tolerance", "must be positive");
        }
    }
    if (j.contains("seed")) {
        if (!j["seed"].is_number_unsigned()) {
            throw ConfigError("seed", "expected a nonnegative integer");
        }
        cfg.seed = j["seed"].get<std::uint64_t>();
    }
    if (j.contains("format")) {
        if (!j["format"].is_string()) {
            throw ConfigError("format", "expected \"json\" or \"csv\"");
        }
        try {
            cfg.format = parse_format(j["format"].get<std::string>());
        } catch (const ParameterError& e) {
            throw ConfigError("format", e.what());
        }
    }
    if (j.contains("sampling")) {
        const json& s = object_at(j["sampling"], "sampling");
        reject_unknown(s, {"samples"}, "sampling.");
        if (s.contains("samples")) {
            cfg.samples = as_count(s["samples"], "sampling.samples");
            if (cfg.samples == 0) {
                throw ConfigError("sampling.samples", "must be positive");
            }
        }
    }
    return cfg;
}

SuiteConfig load_config(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw ConfigError("$", "cannot open config file '" + path + "'");
    }
    json j;
    try {
        j = json::parse(in);
    } catch (const json::parse_error& e) {
        throw ConfigError("$", std::string("invalid JSON: ") + e.what());
    }
    return parse_config(j);
}

double moment_by_quadrature(const MomentSpec& m, double rel_tol) {
    validate(m);
    QuadOptions opt;
    opt.rel_tol = rel_tol;
    opt.abs_tol = 1e-300;
    // A weight vanishing at t = 1 is integrated in u = 1 - t so that the
    // singularity sits at 0, where doubles resolve it.
    const bool reflect = m.omega + m.eta == 0.0;
    const double kink = reflect ? 1.0 - m.xi : m.xi;
    opt.breakpoints = {kink};
    opt.singular_lo = m.eta == 0.0 || reflect;
    const QuadResult q = integrate(
        [&](double x) {
            const double base = reflect ? -m.omega * x : m.omega * x + m.eta;
            return base <= 0.0 ? 0.0 : std::fabs(kink - x) * std::pow(base, m.s);
        },
        0.0, 1.0, opt);
    if (!q.converged) {
        throw QuadratureError("moment quadrature did not converge");
    }
    return q.value;
}

OracleResiduals run_oracles(const OracleSpec& spec, std::uint64_t seed) {
    OracleResiduals res;
    Uniform u(seed ^ 0x5851f42d4c957f2dULL);
    constexpr std::array<MomentCase, 4> cases{MomentCase::Omega1Eta0, MomentCase::Omega1Eta1,
                                              MomentCase::OmegaM1Eta1, MomentCase::OmegaM1Eta2};
    auto rel = [](double x, double ref) { return std::fabs(x - ref) / std::max(std::fabs(ref), 1e-300); };
    for (std::size_t i = 0; i < spec.moment_draws; ++i) {
        const double xi = u();
        const double s = u.in(-0.9, 1.0);
        const std::size_t kind = i % 5;
        double omega;
        double eta;
        if (kind < 4) {
            omega = moment_case_omega(cases[kind]);
            eta = moment_case_eta(cases[kind]);
        } else {
            omega = u.in(0.1, 2.0) * (u() < 0.5 ? -1.0 : 1.0);
            eta = std::max(0.0, -omega) + u.in(0.0, 2.0);
        }
        const double q = moment_by_quadrature({xi, omega, eta, s});
        res.moment_general = std::max(res.moment_general, rel(moment_general({xi, omega, eta, s}), q));
        if (kind < 4) {
            res.moment_case = std::max(res.moment_case, rel(moment_case(cases[kind], xi, s), q));
        }
        const double hq = u.in(1.1, 4.0);
        const double e = hq / (hq - 1.0);
        const std::array<double, 1> br{xi};
        const QuadResult h = integrate([&](double t) { return std::pow(std::fabs(xi - t), e); }, 0.0, 1.0,
                                       1e-13, br);
        res.holder_weight = std::max(res.holder_weight, rel(holder_weight_integral(xi, hq), h.value));
        ++res.moment_points;
    }
    const std::array<const char*, 4> family{"pow:2", "pow:3", "exp", "pow:1.5"};
    for (std::size_t i = 0; i < spec.identity_draws; ++i) {
        const std::string id = family[i % family.size()];
        const double a = u.in(0.0, 2.0);
        const double b = a + u.in(0.1, 2.0);
        const BoundParams p{a, b, u(), u(), 1.0, 1.0};
        res.identity = std::max(res.identity, check_identity(make_function(id, a, b), p));
        ++res.identity_points;
    }
    return res;
}

Report run_suite(const SuiteConfig& cfg) {
    std::vector<BoundResult> records;
    Report r = execute(cfg, [&](const BoundResult& row) { records.push_back(row); });
    r.records = std::move(records);
    return r;
}

Report stream_suite(const SuiteConfig& cfg, std::ostream& out, OutputFormat format) {
    if (format == OutputFormat::Csv) {
        out << csv_header() << '\n';
        return execute(cfg, [&](const BoundResult& row) { out << csv_row(row) << '\n'; });
    }
    JsonStream js(out);
    Report r = execute(cfg, [&](const BoundResult& row) { js.record(row); });
    js.finish(r);
    return r;
}

Report erratum_scan() {
    Report r;
    r.errata = scan_errata();
    return r;
}

void write_report(std::ostream& out, const Report& report, OutputFormat format) {
    if (format == OutputFormat::Csv) {
        out << csv_header() << '\n';
        for (const BoundResult& row : report.records) {
            out << csv_row(row) << '\n';
        }
        return;
    }
    JsonStream js(out);
    for (const BoundResult& row : report.records) {
        js.record(row);
    }
    js.finish(report);
}

std::size_t worker_threads() {
    std::size_t n = 0;
    if (const char* env = std::getenv("HH_VERIFY_THREADS")) {
        const std::string_view v(env);
        std::from_chars(v.data(), v.data() + v.size(), n);
    }
    if (n == 0) {
        n = std::max(1u, std::thread::hardware_concurrency());
    }
    return n;
}

}  // namespace hh
