#include "hh/presets.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "hh/errors.hpp"
#include "hh/identity.hpp"

namespace hh {

namespace {

constexpr double kPinTolerance = 1e-12;

// Powers of nonnegative bases as they appear in the displays.
double P(double x, double e) {
    if (x <= 0.0) {
        return e == 0.0 ? 1.0 : 0.0;
    }
    return std::pow(x, e);
}

double root(double x, double q) { return std::pow(std::max(x, 0.0), 1.0 / q); }
double outer(double w, double q) { return std::pow(w, 1.0 - 1.0 / q); }
double w2(double l) { return 0.5 - l + l * l; }
double hsum(double l, double q) {
    const double r = (2.0 * q - 1.0) / (q - 1.0);
    return P(l, r) + P(1.0 - l, r);
}
double hconst(double q) { return std::pow((q - 1.0) / (2.0 * q - 1.0), 1.0 - 1.0 / q); }

PresetPins pins_lm(std::optional<double> l, std::optional<double> u, bool eq = false) {
    PresetPins p;
    p.lambda = l;
    p.mu = u;
    p.mu_equals_lambda = eq;
    return p;
}

PresetPins with_s(PresetPins p, double s) {
    p.s = s;
    return p;
}

PresetPins with_q(PresetPins p, QRequirement q) {
    p.q = q;
    return p;
}

PresetPins positive_s(PresetPins p) {
    p.s_positive = true;
    return p;
}

std::vector<PresetInfo> build_presets() {
    using B = BoundCase;
    using D = const EndpointData&;
    const double ln2 = std::numbers::ln2;
    std::vector<PresetInfo> t;
    auto add = [&](std::string id, B root_case, std::string ref, Relation rel, PresetPins pins,
                   DisplayFn fn, std::string desc) {
        t.push_back(PresetInfo{std::move(id), root_case, std::move(ref), rel, pins, std::move(fn),
                               std::move(desc)});
    };
    const PresetPins none{};
    const QRequirement q1 = QRequirement::One;
    const QRequirement qg = QRequirement::GreaterThanOne;

    // Theorem displays as printed.
    add("T31_display", B::T31_general, "T31_general", Relation::Equal, none,
        [](D d, double l, double u, double s, double q) {
            const double k = std::pow(1.0 / ((s + 1.0) * (s + 2.0)), 1.0 / q);
            const double a1 = 2.0 * P(2.0 - l, s + 2.0) + ((s + 2.0) * l - 2.0) * std::exp2(s + 1.0) +
                              (s + 2.0) * l - s - 3.0;
            const double b1 = 2.0 * P(l, s + 2.0) - (s + 2.0) * l + s + 1.0;
            const double a2 = 2.0 * P(u, s + 2.0) - (s + 2.0) * u + s + 1.0;
            const double b2 = 2.0 * P(2.0 - u, s + 2.0) + ((s + 2.0) * u - 2.0) * std::exp2(s + 1.0) +
                              (s + 2.0) * u - s - 3.0;
            return d.width / std::exp2(s / q + 2.0) * k *
                   (outer(w2(l), q) * root(a1 * d.A + b1 * d.B, q) +
                    outer(w2(u), q) * root(a2 * d.A + b2 * d.B, q));
        },
        "general lambda, mu bound with moment coefficients written out");
    add("T31_s_minus1_display", B::T31_s_minus1, "T31_s_minus1", Relation::Equal,
        with_s(none, -1.0),
        [ln2](D d, double, double, double, double q) {
            const double c = 2.0 * ln2 - 1.0;
            return d.width / std::exp2(3.0 - 2.0 / q) *
                   (root(c * d.A + d.B, q) + root(d.A + c * d.B, q));
        },
        "s = -1 midpoint bound with 2 ln 2 - 1 constants");
    add("T32_tier1_display", B::T32_tier1, "T32_tier1", Relation::Equal, none,
        [](D d, double l, double u, double s, double q) {
            const double k = std::pow(1.0 / ((s + 1.0) * (s + 2.0)), 1.0 / q);
            const double a1 = 2.0 * P(1.0 - l, s + 2.0) + (s + 2.0) * l - 1.0;
            const double m1 = 2.0 * P(l, s + 2.0) + s + 1.0 - (s + 2.0) * l;
            const double m2 = 2.0 * P(u, s + 2.0) + s + 1.0 - (s + 2.0) * u;
            const double b2 = 2.0 * P(1.0 - u, s + 2.0) + (s + 2.0) * u - 1.0;
            return d.width / 4.0 * k *
                   (outer(w2(l), q) * root(a1 * d.A + m1 * d.M, q) +
                    outer(w2(u), q) * root(m2 * d.M + b2 * d.B, q));
        },
        "endpoint/midpoint bound, first tier");
    add("T32_tier2_display", B::T32_tier2, "T32_tier2", Relation::Equal, none,
        [](D d, double l, double u, double s, double q) {
            const double k = std::pow(1.0 / ((s + 1.0) * (s + 2.0)), 1.0 / q);
            const double a1 = P(1.0 - l, s + 2.0) * std::exp2(s + 1.0) + 2.0 * P(l, s + 2.0) + s +
                              1.0 + ((s + 2.0) * l - 1.0) * std::exp2(s) - (s + 2.0) * l;
            const double b1 = 2.0 * P(l, s + 2.0) - (s + 2.0) * l + s + 1.0;
            const double a2 = 2.0 * P(u, s + 2.0) - (s + 2.0) * u + s + 1.0;
            const double b2 = P(1.0 - u, s + 2.0) * std::exp2(s + 1.0) + 2.0 * P(u, s + 1.0) +
                              ((s + 2.0) * u - 1.0) * std::exp2(s) - (s + 2.0) * u + s + 1.0;
            return d.width / std::exp2(s / q + 2.0) * k *
                   (outer(w2(l), q) * root(a1 * d.A + b1 * d.B, q) +
                    outer(w2(u), q) * root(a2 * d.A + b2 * d.B, q));
        },
        "endpoint/midpoint bound, second tier as printed (2 mu^{s+1} term)");
    add("T33_q1_display", B::T33_q1, "T33_q1", Relation::Equal, with_q(none, q1),
        [](D d, double l, double u, double s, double) {
            const double c = std::exp2(s + 1.0) - 1.0;
            return d.width / (std::exp2(s + 2.0) * (s + 1.0)) *
                   (w2(l) * (d.A + c * d.B) + w2(u) * (c * d.A + d.B));
        },
        "q = 1 bound as printed, with 1/2 - lambda + lambda^2 weights");
    add("T33_qgt1_display", B::T33_qgt1, "T33_qgt1", Relation::Equal, with_q(none, qg),
        [](D d, double l, double u, double s, double q) {
            const double c = std::exp2(s + 1.0) - 1.0;
            return d.width / std::exp2(s / q + 2.0) * hconst(q) * std::pow(1.0 / (s + 1.0), 1.0 / q) *
                   (outer(hsum(l, q), q) * root(c * d.A + d.B, q) +
                    outer(hsum(u, q), q) * root(d.A + c * d.B, q));
        },
        "q > 1 conjugate-exponent bound");
    add("T34_q1_tier1_display", B::T34_q1_tier1, "T34_q1_tier1", Relation::Equal,
        with_q(none, q1),
        [](D d, double l, double u, double s, double) {
            return d.width / (4.0 * (s + 1.0)) * (w2(l) * (d.A + d.M) + w2(u) * (d.M + d.B));
        },
        "q = 1 endpoint/midpoint bound as printed, first tier");
    add("T34_q1_tier2_display", B::T34_q1_tier2, "T34_q1_tier2", Relation::Equal,
        with_q(none, q1),
        [](D d, double l, double u, double s, double) {
            const double c = std::exp2(s) + 1.0;
            return d.width / (std::exp2(s + 2.0) * (s + 1.0)) *
                   (w2(l) * (c * d.A + d.B) + w2(u) * (d.A + c * d.B));
        },
        "q = 1 endpoint/midpoint bound as printed, second tier");
    add("T34_qgt1_tier1_display", B::T34_qgt1_tier1, "T34_qgt1_tier1", Relation::Equal,
        with_q(none, qg),
        [](D d, double l, double u, double s, double q) {
            return d.width / 4.0 * hconst(q) * std::pow(1.0 / (s + 1.0), 1.0 / q) *
                   (outer(hsum(l, q), q) * root(d.A + d.M, q) +
                    outer(hsum(u, q), q) * root(d.M + d.B, q));
        },
        "q > 1 endpoint/midpoint bound, first tier");
    add("T34_qgt1_tier2_display", B::T34_qgt1_tier2, "T34_qgt1_tier2", Relation::Equal,
        with_q(none, qg),
        [](D d, double l, double u, double s, double q) {
            const double c = std::exp2(s) + 1.0;
            return d.width / std::exp2(s / q + 2.0) * hconst(q) *
                   std::pow(1.0 / (s + 1.0), 1.0 / q) *
                   (outer(hsum(l, q), q) * root(c * d.A + d.B, q) +
                    outer(hsum(u, q), q) * root(d.A + c * d.B, q));
        },
        "q > 1 endpoint/midpoint bound, second tier");

    // Corollaries of the general bound.
    add("C31_q1", B::T31_general, "T31_general", Relation::Equal, with_q(none, q1),
        [](D d, double l, double u, double s, double) {
            const double ca = 2.0 * P(2.0 - l, s + 2.0) + 2.0 * P(u, s + 2.0) +
                              ((s + 2.0) * l - 2.0) * std::exp2(s + 1.0) + (s + 2.0) * (l - u) - 2.0;
            const double cb = 2.0 * P(l, s + 2.0) + 2.0 * P(2.0 - u, s + 2.0) +
                              ((s + 2.0) * u - 2.0) * std::exp2(s + 1.0) + (s + 2.0) * (u - l) - 2.0;
            return d.width / (std::exp2(s + 2.0) * (s + 1.0) * (s + 2.0)) * (ca * d.A + cb * d.B);
        },
        "q = 1");
    add("C31_s_minus1_q1", B::T31_s_minus1, "T31_s_minus1", Relation::Equal,
        with_q(with_s(none, -1.0), q1),
        [ln2](D d, double, double, double, double) { return d.width * ln2 * (d.A + d.B); },
        "q = 1 and s = -1: (b-a) ln 2 (|f'(a)| + |f'(b)|)");
    add("C32_lambda_eq_mu", B::T31_general, "T31_general", Relation::Equal,
        pins_lm(std::nullopt, std::nullopt, true),
        [](D d, double l, double, double s, double q) {
            const double k = std::pow(1.0 / ((s + 1.0) * (s + 2.0)), 1.0 / q);
            const double big = 2.0 * P(2.0 - l, s + 2.0) +
                               ((s + 2.0) * l - 2.0) * std::exp2(s + 1.0) + (s + 2.0) * l - s - 3.0;
            const double small = 2.0 * P(l, s + 2.0) + s + 1.0 - (s + 2.0) * l;
            return d.width / std::exp2(s / q + 2.0) * k * outer(w2(l), q) *
                   (root(big * d.A + small * d.B, q) + root(small * d.A + big * d.B, q));
        },
        "lambda = mu");
    add("C32_q1", B::T31_general, "T31_general", Relation::Equal,
        with_q(pins_lm(std::nullopt, std::nullopt, true), q1),
        [](D d, double l, double, double s, double) {
            const double brace = P(2.0 - l, s + 2.0) + P(l, s + 2.0) +
                                 ((s + 2.0) * l - 2.0) * std::exp2(s) - 1.0;
            return d.width * brace * (d.A + d.B) / ((s + 1.0) * (s + 2.0) * std::exp2(s + 1.0));
        },
        "lambda = mu, q = 1");
    add("C32_trapezoid_tier1", B::T31_general, "T31_general", Relation::Equal,
        pins_lm(1.0, 1.0),
        [](D d, double, double, double s, double q) {
            const double k = std::pow(2.0 / ((s + 1.0) * (s + 2.0)), 1.0 / q);
            const double big = 2.0 * s + std::exp2(-s);
            const double small = std::exp2(-s);
            return d.width / 8.0 * k * (root(big * d.A + small * d.B, q) + root(big * d.B + small * d.A, q));
        },
        "trapezoid (lambda = mu = 1), first form");
    add("C32_trapezoid", B::T31_general, "T31_general", Relation::Relaxes, pins_lm(1.0, 1.0),
        [](D d, double, double, double s, double q) {
            return d.width * root(d.A + d.B, q) / 4.0 *
                   std::pow((4.0 + std::pow(0.5, s - 1.0)) / ((s + 1.0) * (s + 2.0)), 1.0 / q);
        },
        "trapezoid (lambda = mu = 1), second form with 4 + (1/2)^{s-1}");
    add("C33_s1", B::T31_general, "T31_general", Relation::Equal, with_s(none, 1.0),
        [](D d, double l, double u, double, double q) {
            const double a1 = 4.0 - 9.0 * l + 12.0 * l * l - 2.0 * l * l * l;
            const double b1 = 2.0 - 3.0 * l + 2.0 * l * l * l;
            const double a2 = 2.0 - 3.0 * u + 2.0 * u * u * u;
            const double b2 = 4.0 - 9.0 * u + 12.0 * u * u - 2.0 * u * u * u;
            return d.width / std::exp2(1.0 / q + 2.0) * std::pow(1.0 / 6.0, 1.0 / q) *
                   (outer(w2(l), q) * root(a1 * d.A + b1 * d.B, q) +
                    outer(w2(u), q) * root(a2 * d.A + b2 * d.B, q));
        },
        "s = 1");
    add("C33_s1_q1", B::T31_general, "T31_general", Relation::Equal,
        with_q(with_s(none, 1.0), q1),
        [](D d, double l, double u, double, double) {
            const double ca = 6.0 - 9.0 * l + 12.0 * l * l - 2.0 * l * l * l - 3.0 * u + 2.0 * u * u * u;
            const double cb = 6.0 + 3.0 * l + 2.0 * l * l * l - 9.0 * u + 12.0 * u * u - 2.0 * u * u * u;
            return d.width / 48.0 * (ca * d.A + cb * d.B);
        },
        "s = 1, q = 1");
    add("C33_s1_lambda_mu", B::T31_general, "T31_general", Relation::Equal,
        with_s(pins_lm(std::nullopt, std::nullopt, true), 1.0),
        [](D d, double l, double, double, double q) {
            const double big = 4.0 - 9.0 * l + 12.0 * l * l - 2.0 * l * l * l;
            const double small = 2.0 - 3.0 * l + 2.0 * l * l * l;
            return d.width / 4.0 * std::pow(1.0 / 12.0, 1.0 / q) * outer(w2(l), q) *
                   (root(big * d.A + small * d.B, q) + root(small * d.A + big * d.B, q));
        },
        "s = 1, lambda = mu");
    add("C33_s1_q1_lambda_mu", B::T31_general, "T31_general", Relation::Equal,
        with_q(with_s(pins_lm(std::nullopt, std::nullopt, true), 1.0), q1),
        [](D d, double l, double, double, double) {
            return d.width / 8.0 * (1.0 - 2.0 * l + 2.0 * l * l) * (d.A + d.B);
        },
        "s = 1, q = 1, lambda = mu");
    add("C35_half", B::T31_general, "T31_general", Relation::Equal,
        with_s(pins_lm(0.5, 0.5), 1.0),
        [](D d, double, double, double, double q) {
            return d.width / 16.0 * (root((3.0 * d.A + d.B) / 4.0, q) + root((d.A + 3.0 * d.B) / 4.0, q));
        },
        "convex case, lambda = mu = 1/2");
    add("C35_third", B::T31_general, "T31_general", Relation::Equal,
        with_s(pins_lm(2.0 / 3.0, 2.0 / 3.0), 1.0),
        [](D d, double, double, double, double q) {
            return 5.0 * d.width / 72.0 *
                   (root((37.0 * d.A + 8.0 * d.B) / 45.0, q) + root((8.0 * d.A + 37.0 * d.B) / 45.0, q));
        },
        "convex case, lambda = mu = 2/3");
    add("C35_simpson", B::T31_general, "T31_general", Relation::Equal,
        with_s(pins_lm(1.0 / 3.0, 1.0 / 3.0), 1.0),
        [](D d, double, double, double, double q) {
            return 5.0 * d.width / 72.0 *
                   (root((61.0 * d.A + 29.0 * d.B) / 90.0, q) + root((29.0 * d.A + 61.0 * d.B) / 90.0, q));
        },
        "convex case, Simpson weights (lambda = mu = 1/3)");

    // Corollaries of the endpoint/midpoint bound.
    add("C32x_q1_tier1", B::T32_tier1, "T32_tier1", Relation::Equal, with_q(none, q1),
        [](D d, double l, double u, double s, double) {
            const double ca = 2.0 * P(1.0 - l, s + 2.0) + (s + 2.0) * l - 1.0;
            const double cm = 2.0 * P(l, s + 2.0) + 2.0 * P(u, s + 2.0) + (s + 2.0) * (1.0 - l - u) + s;
            const double cb = 2.0 * P(1.0 - u, s + 2.0) + (s + 2.0) * u - 1.0;
            return d.width / (4.0 * (s + 1.0) * (s + 2.0)) * (ca * d.A + cm * d.M + cb * d.B);
        },
        "q = 1, first tier");
    add("C32x_q1_tier2", B::T32_tier2, "T32_tier2", Relation::Equal, with_q(none, q1),
        [](D d, double l, double u, double s, double) {
            const double ca = P(1.0 - l, s + 2.0) * std::exp2(s + 1.0) + 2.0 * P(l, s + 2.0) +
                              2.0 * P(u, s + 2.0) + ((s + 2.0) * l - 1.0) * std::exp2(s) +
                              (s + 2.0) * (1.0 - l - u) + s;
            const double cb = 2.0 * P(l, s + 2.0) + P(1.0 - u, s + 2.0) * std::exp2(s + 1.0) +
                              2.0 * P(u, s + 2.0) + (s + 2.0) * (1.0 - l - u) +
                              ((s + 2.0) * u - 1.0) * std::exp2(s) + s;
            return d.width / (std::exp2(s + 2.0) * (s + 1.0) * (s + 2.0)) * (ca * d.A + cb * d.B);
        },
        "q = 1, second tier");
    add("C32x_lambda_mu_tier1", B::T32_tier1, "T32_tier1", Relation::Equal,
        pins_lm(std::nullopt, std::nullopt, true),
        [](D d, double l, double u, double s, double q) {
            const double k = std::pow(1.0 / ((s + 1.0) * (s + 2.0)), 1.0 / q);
            const double ca = 2.0 * P(1.0 - l, s + 2.0) + (s + 2.0) * l - 1.0;
            const double cm1 = 2.0 * P(l, s + 2.0) + s + 1.0 - (s + 2.0) * l;
            const double cm2 = 2.0 * P(u, s + 2.0) + s + 1.0 - (s + 2.0) * l;
            return d.width / 4.0 * k * outer(w2(l), q) *
                   (root(ca * d.A + cm1 * d.M, q) + root(cm2 * d.M + ca * d.B, q));
        },
        "lambda = mu, first tier");
    add("C32x_lambda_mu_tier2", B::T32_tier2, "T32_tier2", Relation::Equal,
        pins_lm(std::nullopt, std::nullopt, true),
        [](D d, double l, double, double s, double q) {
            const double k = std::pow(1.0 / ((s + 1.0) * (s + 2.0)), 1.0 / q);
            const double big1 = std::exp2(s + 1.0) * P(1.0 - l, s + 2.0) + 2.0 * P(l, s + 2.0) -
                                (s + 2.0) * l + ((s + 2.0) * l - 1.0) * std::exp2(s) + s + 1.0;
            const double small = 2.0 * P(l, s + 2.0) - (s + 2.0) * l + s + 1.0;
            const double big2 = 2.0 * P(l, s + 1.0) + P(1.0 - l, s + 2.0) * std::exp2(s + 1.0) +
                                ((s + 2.0) * l - 1.0) * std::exp2(s) - (s + 2.0) * l + s + 1.0;
            return outer(w2(l), q) * d.width / std::exp2(s / q + 2.0) * k *
                   (root(big1 * d.A + small * d.B, q) + root(small * d.A + big2 * d.B, q));
        },
        "lambda = mu, second tier (2 lambda^{s+1} term)");
    add("C32x_s1_tier1", B::T32_tier1, "T32_tier1", Relation::Equal, with_s(none, 1.0),
        [](D d, double l, double u, double, double q) {
            const double ca = 1.0 - 3.0 * l + 6.0 * l * l - 2.0 * l * l * l;
            const double cm1 = 2.0 * l * l * l - 3.0 * l + 3.0;
            const double cm2 = 2.0 * u * u * u - 3.0 * u + 2.0;
            const double cb = 1.0 - 3.0 * u + 6.0 * u * u - 2.0 * u * u * u;
            return d.width / 4.0 * std::pow(1.0 / 6.0, 1.0 / q) *
                   (outer(w2(l), q) * root(ca * d.A + cm1 * d.M, q) +
                    outer(w2(u), q) * root(cm2 * d.M + cb * d.B, q));
        },
        "s = 1, first tier (2 lambda^3 - 3 lambda + 3 term)");
    add("C32x_s1_tier2", B::T32_tier2, "T32_tier2", Relation::Equal, with_s(none, 1.0),
        [](D d, double l, double u, double, double q) {
            const double a1 = 4.0 - 9.0 * l + 12.0 * l * l - 2.0 * l * l * l;
            const double b1 = 2.0 * l * l * l - 3.0 * l + 2.0;
            const double a2 = 2.0 * u * u * u - 3.0 * u + 2.0;
            const double b2 = 4.0 - 9.0 * u + 12.0 * u * u - 2.0 * u * u * u;
            return d.width / std::exp2(1.0 / q + 2.0) * std::pow(1.0 / 6.0, 1.0 / q) *
                   (outer(w2(l), q) * root(a1 * d.A + b1 * d.B, q) +
                    outer(w2(u), q) * root(a2 * d.A + b2 * d.B, q));
        },
        "s = 1, second tier");

    // Corollaries of the conjugate-exponent bound.
    auto t33_sym = [](D d, double l, double s, double q) {
        const double c = std::exp2(s + 1.0) - 1.0;
        return d.width / std::exp2(s / q + 2.0) * hconst(q) * std::pow(1.0 / (s + 1.0), 1.0 / q) *
               outer(hsum(l, q), q) * (root(c * d.A + d.B, q) + root(d.A + c * d.B, q));
    };
    add("C33x_lambda_eq_mu", B::T33_qgt1, "T33_qgt1", Relation::Equal,
        with_q(pins_lm(std::nullopt, std::nullopt, true), qg),
        [t33_sym](D d, double l, double, double s, double q) { return t33_sym(d, l, s, q); },
        "q > 1, lambda = mu");
    auto t33_ends = [](D d, double, double, double s, double q) {
        const double c = std::exp2(s + 1.0) - 1.0;
        return d.width / std::exp2(s / q + 2.0) * hconst(q) * std::pow(1.0 / (s + 1.0), 1.0 / q) *
               (root(c * d.A + d.B, q) + root(d.A + c * d.B, q));
    };
    add("C33x_midpoint", B::T33_qgt1, "T33_qgt1", Relation::Equal,
        with_q(pins_lm(0.0, 0.0), qg), t33_ends, "q > 1, midpoint (lambda = mu = 0)");
    add("C33x_trapezoid", B::T33_qgt1, "T33_qgt1", Relation::Equal,
        with_q(pins_lm(1.0, 1.0), qg), t33_ends, "q > 1, trapezoid (lambda = mu = 1)");
    add("C33x_s1_q1", B::T33_q1, "T33_q1_display", Relation::Equal,
        with_q(with_s(none, 1.0), q1),
        [](D d, double l, double u, double, double) {
            return d.width / 16.0 * (w2(l) * (d.A + 3.0 * d.B) + w2(u) * (3.0 * d.A + d.B));
        },
        "s = 1, q = 1");
    add("C33x_s1_qgt1", B::T33_qgt1, "T33_qgt1", Relation::Equal,
        with_q(with_s(none, 1.0), qg),
        [](D d, double l, double u, double, double q) {
            return d.width / std::exp2(2.0 / q + 2.0) * hconst(q) *
                   (outer(hsum(l, q), q) * root(3.0 * d.A + d.B, q) +
                    outer(hsum(u, q), q) * root(d.A + 3.0 * d.B, q));
        },
        "s = 1, q > 1");
    add("C33x_s1_q1_lambda_mu", B::T33_q1, "T33_q1_display", Relation::Relaxes,
        with_q(with_s(pins_lm(std::nullopt, std::nullopt, true), 1.0), q1),
        [](D d, double l, double, double, double) {
            return d.width / 4.0 * ((1.0 - 2.0 * l + 2.0 * l * l) * (d.A + d.B));
        },
        "s = 1, q = 1, lambda = mu");
    add("C33x_s1_qgt1_lambda_mu", B::T33_qgt1, "T33_qgt1", Relation::Relaxes,
        with_q(with_s(pins_lm(std::nullopt, std::nullopt, true), 1.0), qg),
        [](D d, double l, double, double, double q) {
            return hconst(q) * d.width / std::exp2(2.0 / q) * outer(hsum(l, q), q) * root(d.A + d.B, q);
        },
        "s = 1, q > 1, lambda = mu");

    // Corollaries of the conjugate-exponent endpoint/midpoint bound.
    add("C34x_q1_lambda_mu_tier1", B::T34_q1_tier1, "T34_q1_tier1_display", Relation::Equal,
        with_q(pins_lm(std::nullopt, std::nullopt, true), q1),
        [](D d, double l, double, double s, double) {
            return d.width / (4.0 * (s + 1.0)) * w2(l) * (d.A + 2.0 * d.M + d.B);
        },
        "q = 1, lambda = mu, first tier");
    add("C34x_q1_lambda_mu_tier2", B::T34_q1_tier2, "T34_q1_tier2_display", Relation::Equal,
        with_q(pins_lm(std::nullopt, std::nullopt, true), q1),
        [](D d, double l, double, double s, double) {
            return d.width / (std::exp2(s + 1.0) * (s + 1.0)) * w2(l) * (std::exp2(s - 1.0) + 1.0) *
                   (d.A + d.B);
        },
        "q = 1, lambda = mu, second tier");
    add("C34x_qgt1_lambda_mu_tier1", B::T34_qgt1_tier1, "T34_qgt1_tier1", Relation::Equal,
        with_q(pins_lm(std::nullopt, std::nullopt, true), qg),
        [](D d, double l, double, double s, double q) {
            return d.width / 4.0 * hconst(q) * std::pow(1.0 / (s + 1.0), 1.0 / q) *
                   outer(hsum(l, q), q) * (root(d.A + d.M, q) + root(d.M + d.B, q));
        },
        "q > 1, lambda = mu, first tier");
    add("C34x_qgt1_lambda_mu_tier2", B::T34_qgt1_tier2, "T34_qgt1_tier2", Relation::Equal,
        with_q(pins_lm(std::nullopt, std::nullopt, true), qg),
        [](D d, double l, double, double s, double q) {
            const double c = std::exp2(s) + 1.0;
            return d.width / std::exp2(s / q + 2.0) * hconst(q) *
                   std::pow(1.0 / (s + 1.0), 1.0 / q) * outer(hsum(l, q), q) *
                   (root(c * d.A + d.B, q) + root(d.A + c * d.B, q));
        },
        "q > 1, lambda = mu, second tier");
    add("C34x_s1_q1_tier1", B::T34_q1_tier1, "T34_q1_tier1_display", Relation::Equal,
        with_q(with_s(none, 1.0), q1),
        [](D d, double l, double u, double s, double) {
            return d.width / (4.0 * (s + 1.0)) * (w2(l) * (d.A + d.M) + w2(u) * (d.M + d.B));
        },
        "s = 1, q = 1, first tier");
    add("C34x_s1_q1_tier2", B::T34_q1_tier2, "T34_q1_tier2_display", Relation::Equal,
        with_q(with_s(none, 1.0), q1),
        [](D d, double l, double u, double, double) {
            return d.width / 16.0 * (w2(l) * (3.0 * d.A + d.B) + w2(u) * (d.A + 3.0 * d.B));
        },
        "s = 1, q = 1, second tier");
    add("C34x_s1_qgt1_tier1", B::T34_qgt1_tier1, "T34_qgt1_tier1", Relation::Equal,
        with_q(with_s(none, 1.0), qg),
        [](D d, double l, double u, double, double q) {
            return d.width / std::exp2(1.0 / q + 2.0) * hconst(q) *
                   (outer(hsum(l, q), q) * root(d.M + d.A, q) + outer(hsum(u, q), q) * root(d.M + d.B, q));
        },
        "s = 1, q > 1, first tier");
    add("C34x_s1_qgt1_tier2", B::T34_qgt1_tier2, "T34_qgt1_tier2", Relation::Equal,
        with_q(with_s(none, 1.0), qg),
        [](D d, double l, double u, double, double q) {
            return d.width / std::exp2(2.0 / q + 2.0) * hconst(q) *
                   (outer(hsum(l, q), q) * root(3.0 * d.A + d.B, q) +
                    outer(hsum(u, q), q) * root(d.A + 3.0 * d.B, q));
        },
        "s = 1, q > 1, second tier");

    // Earlier known inequalities recovered as special cases.
    add("E15", B::T31_general, "T31_general", Relation::Equal,
        with_q(with_s(pins_lm(1.0, 1.0), 1.0), q1),
        [](D d, double, double, double, double) { return d.width * (d.A + d.B) / 8.0; },
        "trapezoid, convex |f'|: (b-a)(|f'(a)| + |f'(b)|)/8");
    add("E19", B::T31_general, "C32_trapezoid", Relation::Equal, positive_s(pins_lm(1.0, 1.0)),
        [](D d, double, double, double s, double q) {
            return d.width / 2.0 * std::pow(0.5, 1.0 - 1.0 / q) *
                   std::pow((2.0 + std::exp2(-s)) / ((s + 1.0) * (s + 2.0)), 1.0 / q) *
                   root(d.A + d.B, q);
        },
        "trapezoid, s-convex |f'|^q, 0 < s <= 1");
    add("E111", B::T32_tier1, "T32_tier1", Relation::Equal, positive_s(pins_lm(0.0, 0.0)),
        [](D d, double, double, double s, double q) {
            return d.width / 4.0 * std::pow(1.0 / ((s + 1.0) * (s + 2.0)), 1.0 / q) *
                   std::pow(0.5, 1.0 - 1.0 / q) *
                   (root(d.A + (s + 1.0) * d.M, q) + root(d.B + (s + 1.0) * d.M, q));
        },
        "midpoint, s-convex |f'|^q, 0 < s <= 1");
    add("E112", B::T31_general, "C32_q1", Relation::Equal,
        with_q(positive_s(pins_lm(1.0 / 3.0, 1.0 / 3.0)), q1),
        [](D d, double, double, double s, double) {
            const double num = (s - 4.0) * std::pow(6.0, s + 1.0) + 2.0 * std::pow(5.0, s + 2.0) -
                               2.0 * std::pow(3.0, s + 2.0) + 2.0;
            return num / (std::pow(6.0, s + 2.0) * (s + 1.0) * (s + 2.0)) * d.width * (d.A + d.B);
        },
        "Simpson, s-convex |f'|, 0 < s <= 1");
    return t;
}

bool near(double x, double y) { return std::fabs(x - y) <= kPinTolerance; }

}  // namespace

std::string_view to_string(Relation r) noexcept {
    return r == Relation::Equal ? "equal" : "relaxes";
}

std::span<const PresetInfo> all_presets() {
    static const std::vector<PresetInfo> table = build_presets();
    return table;
}

const PresetInfo& find_preset(std::string_view id) {
    for (const PresetInfo& p : all_presets()) {
        if (p.id == id) {
            return p;
        }
    }
    throw ParameterError("unknown preset '" + std::string(id) + "'");
}

std::optional<BoundParams> pin_params(const PresetInfo& preset, const BoundParams& p) {
    BoundParams out = p;
    const PresetPins& pins = preset.pins;
    if (pins.lambda) {
        out.lambda = *pins.lambda;
    }
    if (pins.mu) {
        out.mu = *pins.mu;
    }
    if (pins.mu_equals_lambda) {
        out.mu = out.lambda;
    }
    if (pins.s) {
        out.s = *pins.s;
    } else if (pins.s_positive ? !(out.s > 0.0) : !(out.s >= -1.0 + 1e-6)) {
        return std::nullopt;
    }
    switch (pins.q) {
        case QRequirement::One:
            out.q = 1.0;
            break;
        case QRequirement::GreaterThanOne:
            if (is_q_one(out.q)) {
                return std::nullopt;
            }
            break;
        case QRequirement::Any:
            break;
    }
    return out;
}

double preset_bound(const PresetInfo& preset, const EndpointData& d, const BoundParams& p) {
    return preset.display(d, p.lambda, p.mu, p.s, p.q);
}

double reference_bound(const PresetInfo& preset, const EndpointData& d, const BoundParams& p) {
    if (auto c = bound_case_from_string(preset.reference)) {
        return bound_value(*c, d, p.lambda, p.mu, p.s, p.q);
    }
    return preset_bound(find_preset(preset.reference), d, p);
}

double relation_deviation(Relation rel, double printed, double reference) noexcept {
    const double scale = 1.0 + std::fabs(reference);
    if (rel == Relation::Equal) {
        return std::fabs(printed - reference) / scale;
    }
    return std::max(0.0, reference - printed) / scale;
}

BoundResult eval_preset(const PresetInfo& preset, const FunctionSpec& f, const BoundParams& p,
                        double tol) {
    validate(p);
    const std::optional<BoundParams> pinned = pin_params(preset, p);
    const bool mismatch = !pinned || !near(pinned->lambda, p.lambda) || !near(pinned->mu, p.mu) ||
                          !near(pinned->s, p.s) || !near(pinned->q, p.q);
    if (mismatch) {
        throw BranchError("preset '" + preset.id + "': parameters disagree with its fixed values");
    }
    const ConvexityCertificate cert = envelope_certificate(f, p.a, p.b, p.s, p.q);
    BoundResult r;
    r.case_id = std::string(to_string(preset.root));
    r.preset = preset.id;
    r.function_id = f.id();
    r.params = RowParams{p.a, p.b, p.lambda, p.mu, p.s, p.q};
    r.certificate = cert.status;
    r.branch_notes = "printed display: " + preset.description;
    if (p.a == p.b) {
        return r;
    }
    if (!f.domain().contains(Interval{p.a, p.b})) {
        throw DomainError("eval_preset: [a, b] outside the domain of '" + f.id() + "'");
    }
    r.lhs = preset.root == BoundCase::T31_s_minus1 ? std::fabs(midpoint_lhs(f, p.a, p.b, tol))
                                                   : std::fabs(hh_lhs(f, p, tol));
    r.bound = preset_bound(preset, endpoint_data(f, p.a, p.b, p.q), p);
    r.slack = r.bound - r.lhs;
    return r;
}

SpecializationResult check_specialization(const PresetInfo& preset,
                                          std::span<const BoundParams> grid,
                                          std::span<const FunctionSpec> family) {
    SpecializationResult result;
    for (const BoundParams& raw : grid) {
        const std::optional<BoundParams> p = pin_params(preset, raw);
        if (!p || !(p->a < p->b)) {
            continue;
        }
        for (const FunctionSpec& f : family) {
            if (!f.domain().contains(Interval{p->a, p->b})) {
                continue;
            }
            const EndpointData d = endpoint_data(f, p->a, p->b, p->q);
            const double dev = relation_deviation(preset.relation, preset_bound(preset, d, *p),
                                                  reference_bound(preset, d, *p));
            ++result.points;
            if (!result.worst || dev > result.max_deviation) {
                result.max_deviation = dev;
                result.worst = *p;
            }
        }
    }
    return result;
}

}  // namespace hh
