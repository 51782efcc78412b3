#include <gtest/gtest.h>

#include <kosh/quadrature.hpp>

using namespace kosh;

TEST(Quadrature, FiniteIntervals)
{
    EXPECT_NEAR(integrate([](double x) { return std::sqrt(x); }, 0.0, 1.0).real(), 2.0 / 3.0, 1e-13);
    EXPECT_NEAR(integrate([](double x) { return std::log(x); }, 0.0, 1.0).real(), -1.0, 1e-12);
    EXPECT_NEAR(integrate([](double x) { return std::cos(50.0 * x); }, 0.0, pi).real(), 0.0, 1e-12);
}

TEST(Quadrature, ComplexIntegrand)
{
    const auto r = integrate([](double x) { return std::exp(cplx(0.0, x)); }, 0.0, pi / 2.0);
    EXPECT_NEAR(r.value.real(), 1.0, 1e-14);
    EXPECT_NEAR(r.value.imag(), 1.0, 1e-14);
}

TEST(Quadrature, SemiInfiniteExponentialAndAlgebraic)
{
    EXPECT_NEAR(integrate_semi_infinite([](double x) { return std::exp(-x); }).real(), 1.0, 1e-13);
    EXPECT_NEAR(integrate_semi_infinite([](double x) { return std::exp(-x) * std::cos(10.0 * x); }).real(), 1.0 / 101.0,
                1e-13);
    // slowly decaying: the mapped remainder past the horizon carries the tail
    EXPECT_NEAR(integrate_semi_infinite([](double x) { return 1.0 / (1.0 + x * x); }).real(), pi / 2.0, 1e-10);
}

TEST(Quadrature, FixedHorizonTruncates)
{
    QuadSpec s;
    s.horizon = Horizon::fixed(2.0);
    const auto r = integrate_semi_infinite([](double x) { return std::exp(-x); }, s);
    EXPECT_NEAR(r.real(), 1.0 - std::exp(-2.0), 1e-14);
    EXPECT_EQ(r.truncation_T, 2.0);
}

TEST(Quadrature, UnreachableToleranceStopsAtRoundoff)
{
    QuadSpec s;
    s.abs_tol = 1e-300;
    s.rel_tol = 1e-18;
    const auto r = integrate([](double x) { return std::exp(x); }, 0.0, 1.0, s);
    EXPECT_NEAR(r.real(), std::exp(1.0) - 1.0, 1e-14);
}

TEST(Quadrature, SplitPointsResolveKinks)
{
    QuadSpec s;
    s.split_points = {0.3};
    EXPECT_NEAR(integrate([](double x) { return std::abs(x - 0.3); }, 0.0, 1.0, s).real(), 0.045 + 0.245, 1e-15);
}

TEST(Quadrature, NodesAreCounted)
{
    const auto r = integrate([](double x) { return x * x; }, 0.0, 1.0);
    EXPECT_GE(r.nodes_used, 21);
    EXPECT_GE(r.abs_err_estimate, 0.0);
}
