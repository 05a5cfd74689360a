#include "hh/functions.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <cmath>
#include <random>
#include <sstream>
#include <utility>

#include "hh/errors.hpp"

namespace hh {

namespace {

constexpr double kLambdaClamp = 1e-6;
constexpr double kViolationRel = 1e-12;
constexpr double kRuleSlack = 1e-12;

std::string format_number(double v) {
    std::ostringstream os;
    os.precision(17);
    os << v;
    return os.str();
}

std::optional<double> parse_number(std::string_view text) {
    double value = 0.0;
    const char* first = text.data();
    const char* last = text.data() + text.size();
    auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc{} || ptr != last || !std::isfinite(value)) {
        return std::nullopt;
    }
    return value;
}

void require_interval(double lo, double hi, std::string_view who) {
    if (!std::isfinite(lo) || !std::isfinite(hi) || !(lo < hi)) {
        throw ParameterError(std::string(who) + ": need finite lo < hi, got [" + format_number(lo) +
                             ", " + format_number(hi) + "]");
    }
}

// Van der Corput radical inverse, used for the Halton triples.
double radical_inverse(std::uint64_t index, std::uint64_t base) {
    double inv_base = 1.0 / static_cast<double>(base);
    double factor = inv_base;
    double result = 0.0;
    while (index > 0) {
        result += static_cast<double>(index % base) * factor;
        index /= base;
        factor *= inv_base;
    }
    return result;
}

double unit_from_bits(std::uint64_t bits) {
    return static_cast<double>(bits >> 11) * 0x1.0p-53;
}

}  // namespace

FunctionSpec::FunctionSpec(std::string id, Interval domain, Fn eval, std::optional<Fn> deriv)
    : id_(std::move(id)), domain_(domain), eval_(std::move(eval)), deriv_(std::move(deriv)) {
    if (!eval_) {
        throw ParameterError("FunctionSpec '" + id_ + "': eval is empty");
    }
    if (deriv_ && !*deriv_) {
        deriv_.reset();
    }
}

double FunctionSpec::deriv(double x) const {
    if (!deriv_) {
        throw DomainError("FunctionSpec '" + id_ + "' has no derivative");
    }
    return (*deriv_)(x);
}

FunctionSpec FunctionSpec::on(Interval domain) const {
    FunctionSpec copy = *this;
    copy.domain_ = domain;
    return copy;
}

FunctionSpec make_power(double p, double lo, double hi) {
    require_interval(lo, hi, "make_power");
    if (!std::isfinite(p)) {
        throw ParameterError("make_power: exponent must be finite");
    }
    if (p < 1.0 && lo <= 0.0) {
        throw DomainError("make_power: x^" + format_number(p) + " needs lo > 0, got lo = " +
                          format_number(lo));
    }
    if (p != std::floor(p) && lo < 0.0) {
        throw DomainError("make_power: non-integer exponent needs lo >= 0");
    }
    auto eval = [p](double x) { return std::pow(x, p); };
    auto deriv = [p](double x) {
        if (p == 0.0) {
            return 0.0;
        }
        if (p == 1.0) {
            return 1.0;
        }
        return p * std::pow(x, p - 1.0);
    };
    return FunctionSpec("pow:" + format_number(p), {lo, hi}, eval, deriv);
}

FunctionSpec make_exp(double lo, double hi) {
    require_interval(lo, hi, "make_exp");
    auto e = [](double x) { return std::exp(x); };
    return FunctionSpec("exp", {lo, hi}, e, e);
}

FunctionSpec make_constant(double c, double lo, double hi) {
    require_interval(lo, hi, "make_constant");
    return FunctionSpec(
        "const:" + format_number(c), {lo, hi}, [c](double) { return c; },
        [](double) { return 0.0; });
}

std::optional<double> power_exponent(std::string_view id) {
    constexpr std::string_view prefix = "pow:";
    if (id.substr(0, prefix.size()) != prefix) {
        return std::nullopt;
    }
    return parse_number(id.substr(prefix.size()));
}

FunctionSpec make_function(std::string_view id, double lo, double hi) {
    if (id == "exp") {
        return make_exp(lo, hi);
    }
    if (auto p = power_exponent(id)) {
        return make_power(*p, lo, hi);
    }
    constexpr std::string_view const_prefix = "const:";
    if (id.substr(0, const_prefix.size()) == const_prefix) {
        if (auto c = parse_number(id.substr(const_prefix.size()))) {
            return make_constant(*c, lo, hi);
        }
    }
    throw ParameterError("unknown function id '" + std::string(id) +
                         "' (expected pow:<p>, exp or const:<c>)");
}

FunctionSpec derivative_q_envelope(const FunctionSpec& f, double q) {
    if (!(q >= 1.0) || !std::isfinite(q)) {
        throw ParameterError("derivative_q_envelope: q must be >= 1");
    }
    if (!f.has_derivative()) {
        throw DomainError("derivative_q_envelope: '" + f.id() + "' has no derivative");
    }
    auto eval = [f, q](double x) { return std::pow(std::fabs(f.deriv(x)), q); };
    return FunctionSpec("|d " + f.id() + "|^" + format_number(q), f.domain(), eval, std::nullopt);
}

std::string_view to_string(CertificateStatus status) noexcept {
    switch (status) {
        case CertificateStatus::CertifiedAnalytic:
            return "certified-analytic";
        case CertificateStatus::NotFalsified:
            return "not-falsified";
        case CertificateStatus::Falsified:
            return "falsified";
    }
    return "unknown";
}

std::string_view to_string(CertificateTarget target) noexcept {
    return target == CertificateTarget::Function ? "f" : "|f'|^q";
}

ConvexityCertificate certify_power_extended_s(double p, double q) {
    if (!(p > 0.0) || !(q >= 1.0)) {
        throw ParameterError("certify_power_extended_s: need p > 0 and q >= 1");
    }
    ConvexityCertificate cert;
    cert.q = q;
    cert.target = CertificateTarget::DerivativeEnvelope;
    const double s = p - 1.0;
    const double sq = s * q;
    const bool rule = sq > -1.0 && sq <= 1.0 + kRuleSlack && s > -1.0 && s <= 1.0 + kRuleSlack;
    if (rule) {
        cert.s = s;
        cert.status = CertificateStatus::CertifiedAnalytic;
        cert.provenance = "power rule: -1 < (p-1)q <= 1 and -1 < p-1 <= 1";
    } else {
        cert.status = CertificateStatus::NotFalsified;
        cert.provenance = "power rule not applicable: (p-1)q = " + format_number(sq);
    }
    return cert;
}

ConvexityCertificate check_extended_s_convex(const FunctionSpec& g, Interval interval, double s,
                                             ConvexitySampling sampling) {
    if (!(s >= -1.0 && s <= 1.0)) {
        throw ParameterError("check_extended_s_convex: s must lie in [-1, 1]");
    }
    if (sampling.samples < 1) {
        throw ParameterError("check_extended_s_convex: samples must be >= 1");
    }
    if (!(interval.lo <= interval.hi)) {
        throw ParameterError("check_extended_s_convex: empty interval");
    }

    ConvexityCertificate cert;
    cert.s = s;
    cert.target = CertificateTarget::DerivativeEnvelope;
    cert.status = CertificateStatus::NotFalsified;
    cert.provenance = "sampling: " + std::to_string(sampling.samples) + " triples, seed " +
                      std::to_string(sampling.seed);

    auto value = [&](double x) {
        const double v = g.eval(x);
        if (!std::isfinite(v)) {
            throw DomainError("check_extended_s_convex: '" + g.id() + "' not finite at x = " +
                              format_number(x));
        }
        if (v < 0.0) {
            throw DomainError("check_extended_s_convex: '" + g.id() + "' negative at x = " +
                              format_number(x));
        }
        return v;
    };

    const double lo = interval.lo;
    const double width = interval.width();
    auto test = [&](double ux, double uy, double lambda) -> bool {
        lambda = std::clamp(lambda, kLambdaClamp, 1.0 - kLambdaClamp);
        const double x = lo + ux * width;
        const double y = lo + uy * width;
        const double z = std::clamp(lambda * x + (1.0 - lambda) * y, interval.lo, interval.hi);
        const double gx = value(x);
        const double gy = value(y);
        const double gz = value(z);
        const double rhs = std::pow(lambda, s) * gx + std::pow(1.0 - lambda, s) * gy;
        const double scale = std::max(std::fabs(gz), std::fabs(rhs));
        if (gz - rhs > kViolationRel * (1.0 + scale)) {
            cert.status = CertificateStatus::Falsified;
            cert.witness = ConvexityWitness{x, y, lambda, gz, rhs};
            return true;
        }
        return false;
    };

    static constexpr std::array<double, 3> kCornerPoints{0.0, 0.5, 1.0};
    static constexpr std::array<double, 5> kCornerLambdas{kLambdaClamp, 0.25, 0.5, 0.75,
                                                          1.0 - kLambdaClamp};
    for (double ux : kCornerPoints) {
        for (double uy : kCornerPoints) {
            for (double lambda : kCornerLambdas) {
                if (test(ux, uy, lambda)) {
                    return cert;
                }
            }
        }
    }

    const std::size_t halton = (sampling.samples + 1) / 2;
    for (std::size_t i = 1; i <= halton; ++i) {
        if (test(radical_inverse(i, 2), radical_inverse(i, 3), radical_inverse(i, 5))) {
            return cert;
        }
    }

    std::mt19937_64 rng(sampling.seed);
    for (std::size_t i = halton; i < sampling.samples; ++i) {
        const double ux = unit_from_bits(rng());
        const double uy = unit_from_bits(rng());
        const double lambda = unit_from_bits(rng());
        if (test(ux, uy, lambda)) {
            return cert;
        }
    }
    return cert;
}

}  // namespace hh
