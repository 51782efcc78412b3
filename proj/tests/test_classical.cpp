#include <gtest/gtest.h>

#include <kosh/classical.hpp>
#include <kosh/param.hpp>

#include "oracles.hpp"

using namespace kosh;

TEST(Param, LimitsAndThreshold)
{
    EXPECT_TRUE(KoshParam::finite(2.0).is_finite());
    EXPECT_TRUE(KoshParam::finite(2e8).is_infinity());
    EXPECT_THROW(KoshParam::finite(0.0), domain_error);
    EXPECT_THROW(KoshParam::finite(-1.0), domain_error);
    EXPECT_THROW(KoshParam::finite(std::nan("")), domain_error);
    EXPECT_THROW(KoshParam::zero().value(), domain_error);
    EXPECT_EQ(KoshParam::zero().b0(), 0.0);
    EXPECT_EQ(KoshParam::infinity().b0(), 1.0);
    EXPECT_NEAR(KoshParam::finite(1.0).b0(), 1.0 / (1.0 + 1.0 / pi), 1e-16);
    EXPECT_EQ(KoshParam::finite(0.25).to_string(), "0.25");
}

TEST(Classical, BernoulliTable)
{
    EXPECT_DOUBLE_EQ(bernoulli_b2k(0), 1.0);
    EXPECT_DOUBLE_EQ(bernoulli_b2k(1), 1.0 / 6.0);
    EXPECT_DOUBLE_EQ(bernoulli_b2k(2), -1.0 / 30.0);
    EXPECT_DOUBLE_EQ(bernoulli_b2k(3), 1.0 / 42.0);
    EXPECT_DOUBLE_EQ(bernoulli_b2k(6), -691.0 / 2730.0);
    EXPECT_THROW(bernoulli_b2k(-1), domain_error);
}

TEST(Classical, RiemannZetaKnownValues)
{
    EXPECT_NEAR(riemann_zeta(2.0), pi * pi / 6.0, 1e-15);
    EXPECT_NEAR(riemann_zeta(4.0), std::pow(pi, 4) / 90.0, 1e-15);
    EXPECT_NEAR(riemann_zeta(0.0), -0.5, 1e-15);
    EXPECT_NEAR(riemann_zeta(-1.0), -1.0 / 12.0, 1e-15);
    EXPECT_NEAR(riemann_zeta(-2.0), 0.0, 1e-15);
    EXPECT_THROW(riemann_zeta(1.0), domain_error);
}

TEST(Classical, ZetaMatchesDirectSum)
{
    // sum_{n<N} n^{-s} + N^{1-s}/(s-1) + N^{-s}/2 + s N^{-s-1}/12
    for (cplx s : {cplx(3.0, 0.0), cplx(2.5, 4.0), cplx(6.0, -1.0)}) {
        const double N = 2000;
        cplx sum = 0.0;
        for (int n = 1; n < N; ++n) sum += std::pow(double(n), -s);
        sum += std::pow(N, 1.0 - s) / (s - 1.0) + 0.5 * std::pow(N, -s) + s * std::pow(N, -s - 1.0) / 12.0;
        EXPECT_LT(std::abs(riemann_zeta(s) - sum), 1e-12) << s;
    }
}

TEST(Classical, HurwitzZeta)
{
    EXPECT_NEAR(hurwitz_zeta(cplx(2.0), 0.5).real(), pi * pi / 2.0, 1e-13);
    EXPECT_NEAR(hurwitz_zeta(cplx(3.0), 1.0).real(), riemann_zeta(3.0), 1e-14);
    const double a = 2.5, N = 3000;
    double sum = 0.0;
    for (int n = 0; n < N; ++n) sum += std::pow(n + a, -3.0);
    sum += 0.5 * std::pow(N + a, -2.0) + 0.5 * std::pow(N + a, -3.0) + 0.25 * std::pow(N + a, -4.0);
    EXPECT_NEAR(hurwitz_zeta(cplx(3.0), a).real(), sum, 1e-14);
    EXPECT_THROW(hurwitz_zeta(cplx(2.0), 0.0), domain_error);
}

TEST(Classical, GammaAndDigamma)
{
    for (double x : {0.3, 1.0, 2.5, 7.0, 30.0}) EXPECT_NEAR(lgamma(cplx(x)).real(), std::lgamma(x), 1e-13 * std::max(1.0, std::lgamma(x)));
    // |Gamma(1/2 + it)|^2 = pi / cosh(pi t)
    for (double t : {0.0, 1.0, 5.0, 20.0}) {
        const double v = std::exp(2.0 * lgamma(cplx(0.5, t)).real());
        EXPECT_NEAR(v / (pi / std::cosh(pi * t)), 1.0, 1e-12);
    }
    EXPECT_NEAR(std::abs(gamma(cplx(-0.25, 3.0)) * gamma(cplx(1.25, -3.0)) * std::sin(pi * cplx(-0.25, 3.0)) / pi), 1.0, 1e-12);
    EXPECT_NEAR(digamma(1.0), -euler_gamma, 1e-15);
    EXPECT_NEAR(digamma(0.5), -euler_gamma - 2.0 * std::log(2.0), 1e-15);
    for (double x : {0.1, 0.7, 3.3, 12.0}) EXPECT_NEAR(digamma(x + 1.0) - digamma(x), 1.0 / x, 1e-13 / x);
    EXPECT_THROW(digamma(-2.0), domain_error);
}

TEST(Classical, ExponentialIntegral)
{
    for (double x : {0.2, 1.0, 4.0}) {
        // E1(x) = int_0^1 e^{-x/u}/u du
        const double ref = oracle::simpson([x](double u) { return u > 0 ? std::exp(-x / u) / u : 0.0; }, 0.0, 1.0, 200000);
        EXPECT_NEAR(expint_e1(x), ref, 1e-10);
    }
    EXPECT_NEAR(exp_e1(1000.0) * 1000.0, 1.0, 1e-3);
}

TEST(Classical, BernoulliKernelBranchesAgree)
{
    for (double x : {0.4999, 0.5, 0.5001}) EXPECT_NEAR(bernoulli_kernel(x), 1.0 / std::expm1(x) - 1.0 / x, 1e-13);
    EXPECT_NEAR(bernoulli_kernel(0.0), -0.5, 0.0);
    EXPECT_NEAR(bernoulli_kernel(1e-8), -0.5 + 1e-8 / 12.0, 1e-17);
}
