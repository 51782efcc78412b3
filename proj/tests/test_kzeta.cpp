#include <gtest/gtest.h>

#include <kosh/kzeta.hpp>
#include <kosh/special.hpp>

#include "oracles.hpp"

using namespace kosh;

namespace {

double zeta2_closed(double p)
{
    const double u = 1.0 / (pi * p);
    return pi * pi / 6.0 * (1.0 + 3.0 * u * (1.0 + u)) / ((1.0 + u) * (1.0 + u));
}

} // namespace

TEST(ZetaP, ClosedValuesAtZeroAndTwo)
{
    for (double p : {0.25, 1.0, 4.0}) {
        const KoshParam kp = KoshParam::finite(p);
        EXPECT_NEAR(zeta_p(kp, 0.0).value.real(), -0.5 / (1.0 + 1.0 / (pi * p)), 1e-9);
        EXPECT_NEAR(zeta_p(kp, 2.0).value.real(), zeta2_closed(p), 1e-9);
        EXPECT_NEAR(zeta_p_series_em(kp, 2.0).value.real(), zeta2_closed(p), 1e-12);
    }
}

TEST(ZetaP, MatchesDirectDirichletSum)
{
    const double p = 1.0;
    const long N = 5000;
    const auto lam = oracle::eigenvalues(p, N);
    double sum = 0.0;
    for (long j = N - 1; j >= 0; --j) sum += oracle::weight(p, lam[j]) * std::pow(lam[j], -4.0);
    sum += 1.0 / (3.0 * std::pow(lam.back() + 0.5, 3.0));
    EXPECT_NEAR(zeta_p(KoshParam::finite(p), 4.0).value.real(), sum, 1e-12);
}

TEST(ZetaP, ContourAndSeriesAgree)
{
    for (double p : {0.5, 1.0, 5.0})
        for (cplx s : {cplx(2.5, 0.0), cplx(0.5, 3.0), cplx(-1.5, 0.0), cplx(0.2, -1.0)}) {
            const cplx a = zeta_p_series_em(KoshParam::finite(p), s).value;
            const cplx b = zeta_p_contour(KoshParam::finite(p), s).value;
            EXPECT_LT(std::abs(a - b), 1e-9 * std::max(1.0, std::abs(a))) << p << ' ' << s;
        }
}

TEST(ZetaP, MellinPaths)
{
    const KoshParam p = KoshParam::finite(1.0);
    for (cplx s : {cplx(2.0), cplx(2.5), cplx(0.6, 1.0)}) {
        EXPECT_LT(std::abs(zeta_p_mellin(p, s).value - zeta_p(p, s).value), 1e-10);
        EXPECT_LT(std::abs(eta_p_mellin(p, s).value - eta_p(p, s).value), 1e-10);
    }
    EXPECT_THROW(zeta_p_mellin(p, -0.5), domain_error);
}

TEST(ZetaP, LimitClosedForms)
{
    for (cplx s : {cplx(3.0), cplx(0.5, 2.0), cplx(-2.5)}) {
        const cplx z = riemann_zeta(s);
        EXPECT_LT(std::abs(zeta_p(KoshParam::infinity(), s).value - z), 1e-13);
        EXPECT_LT(std::abs(eta_p(KoshParam::infinity(), s).value - z), 1e-13);
        EXPECT_LT(std::abs(zeta_p(KoshParam::zero(), s).value - (std::pow(2.0, s) - 1.0) * z), 1e-13);
        EXPECT_LT(std::abs(eta_p(KoshParam::zero(), s).value - (std::pow(2.0, 1.0 - s) - 1.0) * z), 1e-13);
    }
    EXPECT_EQ(zeta_p(KoshParam::infinity(), 2.0).method, Method::closed_form);
    EXPECT_NEAR(zeta_p(KoshParam::finite(1e6), 2.0).value.real(), pi * pi / 6.0, 1e-4);
    EXPECT_NEAR(zeta_p(KoshParam::finite(1e-6), 2.0).value.real(), pi * pi / 2.0, 1e-3);
}

TEST(ZetaP, Routing)
{
    const KoshParam p = KoshParam::finite(1.0);
    EXPECT_EQ(zeta_p(p, 2.0).method, Method::series);
    EXPECT_EQ(zeta_p(p, cplx(0.5, 1.0)).method, Method::continuation);
    EXPECT_EQ(zeta_p(p, -1.5).method, Method::functional_eq);
    EXPECT_THROW(zeta_p(p, 1.0), domain_error);
    EXPECT_THROW(eta_p(p, 1.0), domain_error);
}

TEST(EtaP, FunctionalEquationGrid)
{
    for (double p : {0.5, 1.0, 5.0})
        for (cplx s : {cplx(2.5), cplx(3.0, 1.0), cplx(4.0, -2.0), cplx(1.3, 0.5)}) {
            const KoshParam kp = KoshParam::finite(p);
            const cplx lhs = eta_p_series(kp, s).value;
            const cplx rhs = 2.0 * std::pow(2.0 * pi, s - 1.0) * gamma(1.0 - s) * std::sin(pi * s / 2.0)
                             * zeta_p_contour(kp, 1.0 - s).value;
            EXPECT_LT(std::abs(lhs - rhs), 1e-8 * std::abs(lhs)) << p << ' ' << s;
        }
}

TEST(EtaP, TrivialValues)
{
    for (double p : {0.5, 1.0, 5.0})
        for (int k = 1; k <= 3; ++k) {
            const KoshParam kp = KoshParam::finite(p);
            EXPECT_NEAR(eta_p(kp, -(2.0 * k - 1.0)).value.real(), -gen_bernoulli(kp, k) / (2.0 * k), 1e-10);
            EXPECT_NEAR(std::abs(eta_p(kp, -2.0 * k).value), 0.0, 1e-12);
        }
    EXPECT_NEAR(eta_p(KoshParam::finite(1.0), 0.0).value.real(), -0.5, 1e-12);
}

TEST(XiP, SymmetryAndEvenness)
{
    for (double p : {0.5, 1.0, 5.0}) {
        const KoshParam kp = KoshParam::finite(p);
        for (cplx s : {cplx(0.3, 2.0), cplx(2.0, -1.0), cplx(-1.0, 0.5)})
            EXPECT_LT(std::abs(xi_p(kp, s) - xi_p(kp, 1.0 - s)), 1e-10 * std::max(1.0, std::abs(xi_p(kp, s))));
        for (double t : {0.0, 3.0, 14.0}) {
            EXPECT_NEAR(Xi_p(kp, t), Xi_p(kp, -t), 1e-12 * std::max(1.0, std::abs(Xi_p(kp, t))));
            EXPECT_NEAR(xi_p(kp, cplx(0.5, t)).imag(), 0.0, 1e-11 * std::max(1.0, std::abs(Xi_p(kp, t))));
        }
        EXPECT_NEAR(xi_p(kp, 1.0).real(), 0.25 * (1.0 + kp.b0()), 1e-9);
    }
}

TEST(XiP, ClassicalXi)
{
    EXPECT_NEAR(classical_Xi(0.0), 0.49712077818831410991, 1e-14);
    EXPECT_NEAR(classical_Xi(14.134725141734693790), 0.0, 1e-12);
    // Xi_0(t) = (sqrt 2 cos(t log 2) - 1) Xi(t)
    for (double t : {1.0, 5.0})
        EXPECT_NEAR(Xi_p(KoshParam::zero(), t), (std::sqrt(2.0) * std::cos(t * std::log(2.0)) - 1.0) * classical_Xi(t), 1e-13);
}
