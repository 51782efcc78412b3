#include <gtest/gtest.h>

#include <kosh/sigma.hpp>

#include "oracles.hpp"

using namespace kosh;

TEST(Sigma, MatchesBruteForceEigenSum)
{
    for (double p : {0.5, 1.0, 5.0})
        for (double x : {0.2, 1.0, 3.0}) {
            const double ref = oracle::sigma_sum(p, x).real();
            EXPECT_NEAR(sigma_p(KoshParam::finite(p), x), ref, 1e-13 * std::abs(ref)) << p << ' ' << x;
        }
}

TEST(Sigma, ComplexArgument)
{
    for (cplx z : {cplx(1.0, 2.0), cplx(0.3, -5.0)}) {
        const cplx ref = oracle::sigma_sum(1.0, z);
        EXPECT_LT(std::abs(sigma_p(KoshParam::finite(1.0), z) - ref), 1e-12 * std::abs(ref));
    }
}

TEST(Sigma, LimitClosedForms)
{
    for (double x : {0.1, 1.0, 4.0}) {
        EXPECT_NEAR(sigma_p(KoshParam::infinity(), x), 1.0 / std::expm1(x), 1e-15 / x);
        EXPECT_NEAR(sigma_p(KoshParam::zero(), x), 0.5 / std::sinh(0.5 * x), 1e-15 / x);
    }
    EXPECT_NEAR(sigma_p(KoshParam::finite(1e6), 1.0), 1.0 / std::expm1(1.0), 1e-4);
    EXPECT_NEAR(sigma_p(KoshParam::finite(1e-6), 1.0), 0.5 / std::sinh(0.5), 1e-3);
}

TEST(Sigma, RegularPartIsContinuousAtZero)
{
    const KoshParam p = KoshParam::finite(1.0);
    const SigmaKernel S(p);
    EXPECT_NEAR(S.regular(1.0), S(1.0) - 1.0, 1e-15);
    // sigma_p(x) - 1/x -> -B_0/2 as x -> 0
    EXPECT_NEAR(S.regular(1e-9), -0.5 * p.b0(), 1e-8);
    EXPECT_NEAR(S.regular(1e-3), S.regular(1.001e-3), 1e-5);
}

TEST(Kernel, ClosedFormMatchesGeometricSeries)
{
    for (double p : {0.5, 1.0, 4.0})
        for (double t : {0.05, 0.3, 1.2}) {
            if (t >= p) continue;
            EXPECT_NEAR(inv_sigma_exp(KoshParam::finite(p), t), oracle::k_geometric(p, t), 1e-14) << p << ' ' << t;
        }
}

TEST(Kernel, RegularPartAndLimits)
{
    const KoshParam p = KoshParam::finite(2.0);
    for (double t : {1e-6, 0.1, 3.0})
        EXPECT_NEAR(inv_sigma_exp_regular(p, t) + p.b0() / (2.0 * pi * t), inv_sigma_exp(p, t), 1e-10 * std::max(1.0, 1.0 / t));
    for (double t : {0.2, 1.0}) {
        EXPECT_NEAR(inv_sigma_exp(KoshParam::infinity(), t), 1.0 / std::expm1(2.0 * pi * t), 1e-16);
        EXPECT_NEAR(inv_sigma_exp(KoshParam::zero(), t), -1.0 / (std::exp(2.0 * pi * t) + 1.0), 1e-16);
    }
    // the kernel changes sign at t = p
    EXPECT_GT(inv_sigma_exp(p, 1.9), 0.0);
    EXPECT_LT(inv_sigma_exp(p, 2.1), 0.0);
    EXPECT_THROW(sigma_ratio(p, cplx(2.0)), domain_error);
}
