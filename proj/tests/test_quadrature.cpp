#include <gtest/gtest.h>

#include <array>
#include <cmath>

#include "hh/errors.hpp"
#include "hh/functions.hpp"
#include "hh/quadrature.hpp"
#include "oracle.hpp"

using namespace hh;

TEST(Quadrature, Polynomials) {
    const QuadResult r = integrate([](double x) { return x * x * x - 2 * x; }, -1.0, 3.0, 1e-13);
    EXPECT_TRUE(r.converged);
    EXPECT_NEAR(r.value, 20.0 - 8.0, 1e-12);
}

TEST(Quadrature, KinkWithBreakpoint) {
    const std::array<double, 1> br{0.3};
    const QuadResult r = integrate([](double x) { return std::fabs(x - 0.3); }, 0.0, 1.0, 1e-13, br);
    EXPECT_NEAR(r.value, 0.5 - 0.3 + 0.09, 1e-14);
}

TEST(Quadrature, EndpointSingularity) {
    QuadOptions opt;
    opt.rel_tol = 1e-12;
    opt.singular_lo = true;
    const QuadResult r = integrate([](double x) { return std::pow(x, -0.9); }, 0.0, 1.0, opt);
    EXPECT_TRUE(r.converged);
    EXPECT_NEAR(r.value, 10.0, 1e-9);
}

TEST(Quadrature, AgreesWithTanhSinh) {
    auto f = [](double x) { return std::exp(-x) * std::cos(3 * x) + std::sqrt(x); };
    const QuadResult r = integrate(f, 0.0, 2.0, 1e-13);
    EXPECT_NEAR(r.value, oracle::tanh_sinh(f, 0.0, 2.0), 1e-12);
}

TEST(Quadrature, Errors) {
    EXPECT_THROW(integrate([](double) { return 1.0; }, 1.0, 0.0, 1e-10), ParameterError);
    EXPECT_THROW(integrate([](double) { return NAN; }, 0.0, 1.0, 1e-10), QuadratureError);
    const std::array<double, 1> outside{2.0};
    EXPECT_THROW(integrate([](double) { return 1.0; }, 0.0, 1.0, 1e-10, outside), ParameterError);
}

TEST(Quadrature, BudgetExhaustionIsReported) {
    QuadOptions opt;
    opt.max_panels = 4;
    opt.rel_tol = 1e-14;
    const QuadResult r = integrate([](double x) { return std::sin(200 * x); }, 0.0, 1.0, opt);
    EXPECT_FALSE(r.converged);
}

TEST(MeanIntegral, KnownValues) {
    EXPECT_NEAR(mean_integral(make_power(2, 0, 1), 0, 1), 1.0 / 3.0, 1e-15);
    EXPECT_NEAR(mean_integral(make_exp(0, 1), 0, 1), std::exp(1.0) - 1.0, 1e-14);
    EXPECT_THROW(mean_integral(make_exp(0, 1), 0, 2), DomainError);
    EXPECT_THROW(mean_integral(make_exp(0, 1), 0.5, 0.5), ParameterError);
}
