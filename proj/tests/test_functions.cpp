#include <gtest/gtest.h>

#include <cmath>

#include "hh/errors.hpp"
#include "hh/functions.hpp"

using namespace hh;

TEST(Functions, PowerValuesAndDerivative) {
    const FunctionSpec f = make_power(3.0, 0.0, 2.0);
    EXPECT_EQ(f.id(), "pow:3");
    EXPECT_DOUBLE_EQ(f.eval(1.5), 3.375);
    EXPECT_DOUBLE_EQ(f.deriv(1.5), 6.75);
}

TEST(Functions, RegistryIds) {
    EXPECT_EQ(make_function("exp", -1, 1).id(), "exp");
    EXPECT_EQ(make_function("pow:1.5", 0, 1).id(), "pow:1.5");
    EXPECT_DOUBLE_EQ(make_function("const:2", 0, 1).eval(0.3), 2.0);
    EXPECT_THROW(make_function("sin", 0, 1), ParameterError);
    EXPECT_THROW(make_function("pow:0.5", 0, 1), DomainError);
    EXPECT_EQ(power_exponent("pow:2.5"), 2.5);
    EXPECT_FALSE(power_exponent("exp"));
}

TEST(Functions, EnvelopeHasNoDerivative) {
    const FunctionSpec g = derivative_q_envelope(make_exp(0, 1), 2.0);
    EXPECT_FALSE(g.has_derivative());
    EXPECT_NEAR(g.eval(0.5), std::exp(1.0), 1e-15);
    EXPECT_THROW(g.deriv(0.5), DomainError);
    EXPECT_THROW(derivative_q_envelope(make_exp(0, 1), 0.5), ParameterError);
}

TEST(Certificates, PowerRule) {
    // x^1.5 with q = 2: (p-1)q = 1 sits on the closed end of the rule.
    const ConvexityCertificate c = certify_power_extended_s(1.5, 2.0);
    EXPECT_TRUE(c.certified());
    ASSERT_TRUE(c.s);
    EXPECT_DOUBLE_EQ(*c.s, 0.5);
    EXPECT_FALSE(certify_power_extended_s(3.0, 1.0).certified());
    EXPECT_FALSE(certify_power_extended_s(1.5, 3.0).certified());
    EXPECT_TRUE(certify_power_extended_s(0.5, 1.5).certified());
    EXPECT_THROW(certify_power_extended_s(-1.0, 1.0), ParameterError);
}

TEST(Certificates, SamplerNeverCertifies) {
    const FunctionSpec g = derivative_q_envelope(make_power(2.0, 0.0, 1.0), 1.0);
    const ConvexityCertificate c = check_extended_s_convex(g, {0.0, 1.0}, 1.0);
    EXPECT_EQ(c.status, CertificateStatus::NotFalsified);
    EXPECT_FALSE(c.witness);
}

TEST(Certificates, SamplerFindsWitness) {
    // A strictly concave envelope cannot be convex.
    const FunctionSpec g = derivative_q_envelope(make_power(1.5, 0.0, 1.0), 1.0);  // 1.5 sqrt(x)
    const ConvexityCertificate c = check_extended_s_convex(g, {0.0, 1.0}, 1.0);
    EXPECT_EQ(c.status, CertificateStatus::Falsified);
    ASSERT_TRUE(c.witness);
    EXPECT_GT(c.witness->lhs, c.witness->rhs);
}

TEST(Certificates, SamplerIsDeterministic) {
    const FunctionSpec g = derivative_q_envelope(make_exp(-1.0, 1.0), 3.0);
    const auto c1 = check_extended_s_convex(g, {-1.0, 1.0}, 0.2, {64, 9});
    const auto c2 = check_extended_s_convex(g, {-1.0, 1.0}, 0.2, {64, 9});
    EXPECT_EQ(c1.status, c2.status);
}
