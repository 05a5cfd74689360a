#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "hh/errors.hpp"
#include "hh/moments.hpp"
#include "oracle.hpp"

using namespace hh;

namespace {
double rel(double x, double ref) { return std::fabs(x - ref) / std::fabs(ref); }
}  // namespace

TEST(Moments, PublishedConstants) {
    // ∫₀¹ |1 - t| t dt = 1/6.
    EXPECT_NEAR(moment_general({1.0, 1.0, 0.0, 1.0}), 1.0 / 6.0, 1e-15);
    // ∫₀¹ |1 - t| / (1 + t) dt = 2 ln 2 - 1.
    EXPECT_NEAR(moment_harmonic(1.0, 1.0, 1.0), 2.0 * std::log(2.0) - 1.0, 1e-15);
    // ∫₀¹ |0 - t| / t dt = 1.
    EXPECT_NEAR(moment_harmonic(0.0, 1.0, 0.0), 1.0, 1e-15);
}

TEST(Moments, GeneralAgreesWithOracle) {
    std::mt19937_64 gen(11);
    std::uniform_real_distribution<double> U(0.0, 1.0);
    for (int i = 0; i < 300; ++i) {
        const double xi = U(gen);
        const double s = -0.9 + 1.9 * U(gen);
        const double omega = (0.2 + 1.8 * U(gen)) * (U(gen) < 0.5 ? -1 : 1);
        const double eta = std::max(0.0, -omega) + 2.0 * U(gen);
        EXPECT_LT(rel(moment_general({xi, omega, eta, s}), oracle::moment(xi, omega, eta, s)), 1e-11)
            << xi << " " << omega << " " << eta << " " << s;
    }
}

TEST(Moments, SpecialCasesMatchGeneral) {
    for (MomentCase c : {MomentCase::Omega1Eta0, MomentCase::Omega1Eta1, MomentCase::OmegaM1Eta1,
                         MomentCase::OmegaM1Eta2}) {
        for (double xi : {0.0, 0.1, 0.5, 0.77, 1.0}) {
            for (double s : {-0.9, -0.5, 0.0, 0.3, 1.0}) {
                const double w = moment_case_omega(c);
                const double e = moment_case_eta(c);
                EXPECT_LT(rel(moment_case(c, xi, s), oracle::moment(xi, w, e, s)), 1e-11)
                    << to_string(c) << " xi=" << xi << " s=" << s;
            }
        }
    }
}

TEST(Moments, VerbatimCaseDiffersAwayFromXiEqualsTwo) {
    const double good = moment_case(MomentCase::OmegaM1Eta2, 0.4, 0.5);
    const double printed = moment_case_m1_2_verbatim(0.4, 0.5);
    EXPECT_GT(std::fabs(good - printed), 1e-3);
}

TEST(Moments, CaseLookup) {
    EXPECT_EQ(moment_case_from(-1.0, 2.0), MomentCase::OmegaM1Eta2);
    EXPECT_EQ(to_string(MomentCase::Omega1Eta0), "(1,0)");
    EXPECT_THROW(moment_case_from(2.0, 0.0), ParameterError);
}

TEST(Moments, HarmonicAgreesWithOracle) {
    for (double xi : {0.0, 0.25, 0.6, 1.0}) {
        for (auto [w, e] : {std::pair{1.0, 1.0}, {-1.0, 2.0}, {0.5, 0.3}, {-0.4, 1.0}}) {
            EXPECT_LT(rel(moment_harmonic(xi, w, e), oracle::moment(xi, w, e, -1.0)), 1e-11);
        }
    }
}

TEST(Moments, HarmonicSingular) {
    // 1/t is integrable against |ξ - t| only when ξ = 0.
    EXPECT_THROW(moment_harmonic(0.5, 1.0, 0.0), SingularityError);
    EXPECT_THROW(moment_harmonic(0.5, -1.0, 1.0), SingularityError);
    EXPECT_NO_THROW(moment_harmonic(1.0, -1.0, 1.0));
}

TEST(Moments, HolderWeight) {
    for (double q : {1.2, 2.0, 5.0}) {
        const double e = q / (q - 1.0);
        for (double xi : {0.0, 0.3, 1.0}) {
            const double ref = oracle::piecewise([&](double t) { return std::pow(std::fabs(xi - t), e); },
                                                 {0.0, xi, 1.0});
            EXPECT_LT(rel(holder_weight_integral(xi, q), ref), 1e-12);
        }
    }
    EXPECT_THROW(holder_weight_integral(0.5, 1.0), BranchError);
}

TEST(Moments, Validation) {
    EXPECT_THROW(moment_general({1.5, 1.0, 0.0, 1.0}), ParameterError);
    EXPECT_THROW(moment_general({0.5, 0.0, 1.0, 1.0}), ParameterError);
    EXPECT_THROW(moment_general({0.5, -2.0, 1.0, 1.0}), ParameterError);
    EXPECT_THROW(moment_general({0.5, 1.0, 0.0, -1.0}), SingularityError);
}

TEST(Moments, AbsWeight) {
    EXPECT_DOUBLE_EQ(abs_weight_integral(1.0), 0.5);
    EXPECT_DOUBLE_EQ(abs_weight_integral(0.5), 0.25);
}
