#include "hh/moments.hpp"

#include <cmath>
#include <string>

#include "hh/errors.hpp"

namespace hh {

namespace {

constexpr double kMinSPlusOne = 1e-6;
constexpr double kQOneThreshold = 1e-9;

// x^e for x >= 0 and e > 0, with 0^e = 0.
double pos_pow(double x, double e) {
    if (x <= 0.0) {
        return 0.0;
    }
    return std::exp(e * std::log(x));
}

void require_xi(double xi) {
    if (!(xi >= 0.0 && xi <= 1.0)) {
        throw ParameterError("moment: xi must lie in [0, 1], got " + std::to_string(xi));
    }
}

void require_s(double s) {
    if (!std::isfinite(s)) {
        throw ParameterError("moment: s must be finite");
    }
    if (s < -1.0 + kMinSPlusOne) {
        throw SingularityError("moment: s = " + std::to_string(s) +
                               " is below -1 + 1e-6; use the harmonic moment at s = -1");
    }
}

}  // namespace

void validate(const MomentSpec& m) {
    require_xi(m.xi);
    if (m.omega == 0.0 || !std::isfinite(m.omega)) {
        throw ParameterError("moment: omega must be finite and nonzero");
    }
    if (!(m.eta >= 0.0) || !std::isfinite(m.eta)) {
        throw ParameterError("moment: eta must be finite and >= 0");
    }
    if (m.omega + m.eta < 0.0) {
        throw ParameterError("moment: need omega + eta >= 0");
    }
}

double moment_general(const MomentSpec& m) {
    validate(m);
    require_s(m.s);
    const double xi = m.xi;
    const double w = m.omega;
    const double e = m.eta;
    const double s = m.s;
    const double num = 2.0 * pos_pow(w * xi + e, s + 2.0) -
                       (e + (s + 2.0) * w * xi) * pos_pow(e, s + 1.0) -
                       (2.0 * w * xi + e + s * w * (xi - 1.0) - w) * pos_pow(w + e, s + 1.0);
    return num / (w * w * (s + 1.0) * (s + 2.0));
}

MomentCase moment_case_from(double omega, double eta) {
    if (omega == 1.0 && eta == 0.0) {
        return MomentCase::Omega1Eta0;
    }
    if (omega == 1.0 && eta == 1.0) {
        return MomentCase::Omega1Eta1;
    }
    if (omega == -1.0 && eta == 1.0) {
        return MomentCase::OmegaM1Eta1;
    }
    if (omega == -1.0 && eta == 2.0) {
        return MomentCase::OmegaM1Eta2;
    }
    throw ParameterError("moment_case: (omega, eta) must be one of (1,0), (1,1), (-1,1), (-1,2)");
}

double moment_case_omega(MomentCase c) noexcept {
    return (c == MomentCase::Omega1Eta0 || c == MomentCase::Omega1Eta1) ? 1.0 : -1.0;
}

double moment_case_eta(MomentCase c) noexcept {
    switch (c) {
        case MomentCase::Omega1Eta0:
            return 0.0;
        case MomentCase::Omega1Eta1:
        case MomentCase::OmegaM1Eta1:
            return 1.0;
        case MomentCase::OmegaM1Eta2:
            return 2.0;
    }
    return 0.0;
}

std::string_view to_string(MomentCase c) noexcept {
    switch (c) {
        case MomentCase::Omega1Eta0:
            return "(1,0)";
        case MomentCase::Omega1Eta1:
            return "(1,1)";
        case MomentCase::OmegaM1Eta1:
            return "(-1,1)";
        case MomentCase::OmegaM1Eta2:
            return "(-1,2)";
    }
    return "?";
}

double moment_case(MomentCase c, double xi, double s) {
    require_xi(xi);
    require_s(s);
    const double d = (s + 1.0) * (s + 2.0);
    const double two_s1 = std::exp2(s + 1.0);
    switch (c) {
        case MomentCase::Omega1Eta0:
            return (2.0 * pos_pow(xi, s + 2.0) - (s + 2.0) * xi + s + 1.0) / d;
        case MomentCase::Omega1Eta1:
            return (2.0 * pos_pow(xi + 1.0, s + 2.0) - ((s + 2.0) * xi - s) * two_s1 -
                    (s + 2.0) * xi - 1.0) /
                   d;
        case MomentCase::OmegaM1Eta1:
            return (2.0 * pos_pow(1.0 - xi, s + 2.0) + (s + 2.0) * xi - 1.0) / d;
        case MomentCase::OmegaM1Eta2:
            return (2.0 * pos_pow(2.0 - xi, s + 2.0) + ((s + 2.0) * xi - 2.0) * two_s1 +
                    (s + 2.0) * xi - s - 3.0) /
                   d;
    }
    return 0.0;
}

double moment_case_m1_2_verbatim(double xi, double s) {
    require_xi(xi);
    require_s(s);
    const double eta = 2.0;
    return (2.0 * pos_pow(2.0 - xi, s + 2.0) + ((s + 2.0) * xi - 2.0) * std::exp2(s + 1.0) +
            (s + 2.0) * eta - s - 3.0) /
           ((s + 1.0) * (s + 2.0));
}

double moment_harmonic(double xi, double omega, double eta) {
    require_xi(xi);
    if (omega == 0.0 || !std::isfinite(omega) || !std::isfinite(eta)) {
        throw ParameterError("moment_harmonic: omega must be finite and nonzero");
    }
    if (eta < 0.0 || omega + eta < 0.0) {
        throw ParameterError("moment_harmonic: need omega*t + eta >= 0 on [0, 1]");
    }
    // |ξ - t| / (ωt + η) = sign(t - ξ)·[1/ω - cω/(ωt + η)], c = (ωξ + η)/ω².
    const double c = (omega * xi + eta) / (omega * omega);
    const double root = -eta / omega;
    const bool pole_on_support = root >= 0.0 && root <= 1.0;
    if (pole_on_support && c != 0.0) {
        throw SingularityError("moment_harmonic: omega*t + eta vanishes at t = " +
                               std::to_string(root) + " with a non-integrable pole");
    }
    auto g = [&](double t) {
        double v = -t / omega;
        if (c != 0.0) {
            v += c * std::log(std::fabs(omega * t + eta));
        }
        return v;
    };
    return 2.0 * g(xi) - g(0.0) - g(1.0);
}

double holder_weight_integral(double xi, double q) {
    require_xi(xi);
    if (!std::isfinite(q) || q < 1.0 + kQOneThreshold) {
        throw BranchError("holder_weight_integral: q = " + std::to_string(q) +
                          " is within 1e-9 of 1; use the q = 1 branch");
    }
    const double r = (2.0 * q - 1.0) / (q - 1.0);
    return (q - 1.0) / (2.0 * q - 1.0) * (pos_pow(xi, r) + pos_pow(1.0 - xi, r));
}

}  // namespace hh
