#include <gtest/gtest.h>

#include <kosh/identities.hpp>

using namespace kosh;

namespace {

std::string job_name(const ::testing::TestParamInfo<SuiteJob>& info)
{
    std::string s = info.param.id;
    for (const auto& [k, v] : info.param.params) s += "_" + k + "_" + v;
    for (auto& c : s)
        if (!std::isalnum(static_cast<unsigned char>(c))) c = '_';
    return s + "_" + std::to_string(info.index);
}

} // namespace

class SuiteCase : public ::testing::TestWithParam<SuiteJob> {};

TEST_P(SuiteCase, PassesAtDeskProfile)
{
    const auto& job = GetParam();
    const VerifyReport r = run_identity(job.id, job.params, profile_by_name("desk"));
    EXPECT_TRUE(r.pass) << r.id << " abs " << r.max_abs_dev << " rel " << r.max_rel_dev << " " << r.error;
    EXPECT_GE(r.sides.size(), 2u);
}

INSTANTIATE_TEST_SUITE_P(Registry, SuiteCase, ::testing::ValuesIn(suite_jobs()), job_name);

TEST(Registry, ExactIdSet)
{
    std::vector<std::string> ids;
    for (const auto& e : registry()) ids.push_back(e.id);
    const std::vector<std::string> expected = {"ramanujan-odd", "lerch-gen", "dedekind", "e2", "glaisher-apostol", "page220",
                                               "page220-combination", "kosh-theta", "kosh-hardy", "functional-eq",
                                               "mellin-334", "eta-trivial-values"};
    EXPECT_EQ(ids, expected);
    EXPECT_EQ(find_entry("nope"), nullptr);
    EXPECT_THROW(run_identity("nope", {}, profile_by_name("desk")), domain_error);
    EXPECT_THROW(run_identity("dedekind", {{"p", "1"}}, profile_by_name("desk")), domain_error);
    EXPECT_THROW(profile_by_name("turbo"), domain_error);
}

TEST(Registry, ParallelOrderIsJobOrder)
{
    std::vector<SuiteJob> jobs = {{"dedekind", {{"p", "1"}, {"alpha", "0.7"}}},
                                  {"e2", {{"p", "2"}, {"alpha", "1.1"}}},
                                  {"lerch-gen", {{"p", "0.5"}, {"m", "0"}}},
                                  {"dedekind", {{"p", "3"}, {"alpha", "2.2"}}}};
    const auto a = run_jobs(jobs, profile_by_name("desk"), 1);
    const auto b = run_jobs(jobs, profile_by_name("desk"), 3);
    ASSERT_EQ(a.size(), b.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
        EXPECT_EQ(a[i].id, b[i].id);
        ASSERT_EQ(a[i].sides.size(), b[i].sides.size());
        for (std::size_t k = 0; k < a[i].sides.size(); ++k) EXPECT_EQ(a[i].sides[k].value, b[i].sides[k].value);
    }
}

TEST(Report, GroupsAndInequalities)
{
    VerifyReport r;
    r.tol = 1e-6;
    r.sides = {{"a", 1.0, 0}, {"b", 1.0 + 1e-9, 0}, {"c", 5.0, 1}, {"d", 5.0, 1}};
    detail::finalize(r);
    EXPECT_TRUE(r.pass);
    EXPECT_NEAR(r.max_abs_dev, 1e-9, 1e-15);
    r.sides.push_back({"e", 5.1, 1});
    detail::finalize(r);
    EXPECT_FALSE(r.pass);
    r.sides.pop_back();
    r.checks.push_back({"x < y", 1.0, 1.0005, 1e-3});
    detail::finalize(r);
    EXPECT_FALSE(r.pass);
    r.checks.back().rhs = 2.0;
    detail::finalize(r);
    EXPECT_TRUE(r.pass);
}

TEST(Report, TightToleranceFails)
{
    const auto r = verify_page220(KoshParam::finite(1.0), 1.5, 1e-300);
    EXPECT_FALSE(r.pass);
}

TEST(Identities, DomainErrors)
{
    EXPECT_THROW(verify_ramanujan_odd(KoshParam::finite(1.0), 0, 1.0), domain_error);
    EXPECT_THROW(verify_ramanujan_odd(KoshParam::finite(1.0), 1, -1.0), domain_error);
    EXPECT_THROW(verify_glaisher_apostol(KoshParam::finite(1.0), 1), domain_error);
    EXPECT_THROW(verify_page220(KoshParam::finite(1.0), 0.0), domain_error);
    EXPECT_THROW(verify_kosh_theta(KoshParam::finite(1.0), 0.0), domain_error);
    EXPECT_THROW(verify_eta_trivial(KoshParam::finite(1.0), 0), domain_error);
    EXPECT_THROW(G_alpha(0.0), domain_error);
}

TEST(Identities, RamanujanNegativeAndPositiveM)
{
    for (int m : {-3, -2, -1, 1, 2})
        for (double a : {pi / 2.0, 1.3 * pi}) {
            const auto r = verify_ramanujan_odd(KoshParam::finite(2.0), m, a);
            EXPECT_TRUE(r.pass) << m << ' ' << a << ' ' << r.max_abs_dev;
        }
}

TEST(Identities, ModularSymmetryOfSpectralSides)
{
    // with alpha beta = 1 the spectral weight cos(t log(alpha)/2) is even in log alpha
    const auto a = verify_page220(KoshParam::finite(1.0), 2.0, tol_quadrature, {}, true);
    const auto b = verify_page220(KoshParam::finite(1.0), 0.5, tol_quadrature, {}, true);
    EXPECT_EQ(a.sides[2].value, b.sides[2].value);
    EXPECT_NEAR(a.sides[3].value.real(), b.sides[3].value.real(), 1e-12);
    EXPECT_TRUE(a.pass && b.pass);
    const auto t1 = verify_kosh_theta(KoshParam::finite(1.0), 1.0);
    const auto t2 = verify_kosh_theta(KoshParam::finite(1.0), pi);
    EXPECT_NEAR(t1.sides[2].value.real(), t2.sides[2].value.real(), 1e-12);
}

TEST(Identities, GVanishes)
{
    for (double a : {0.5, 1.0, 2.0}) EXPECT_LT(std::abs(G_alpha(a)), 1e-9);
}

TEST(Identities, FpDualPath)
{
    for (auto [p, n] : std::vector<std::pair<KoshParam, double>>{
             {KoshParam::finite(1.0), 0.0}, {KoshParam::finite(1.0), 0.3}, {KoshParam::infinity(), 0.0}, {KoshParam::zero(), 0.0}}) {
        const auto re = F_p_real(p, n);
        const auto sp = F_p_spectral(p, n);
        EXPECT_NEAR(re.real(), sp.real(), 1e-5 * std::abs(re.real()));
        EXPECT_LE(sp.truncation_T, 60.0);
    }
}

TEST(Identities, HardyBracketRegularForm)
{
    const KoshParam p = KoshParam::finite(1.0);
    for (double x : {0.3, 1.0, 4.0}) EXPECT_NEAR(capital_phi_regular(p, x), capital_phi(p, x) + (1.0 + p.b0()) / (2.0 * x), 1e-11);
}

TEST(Identities, Deterministic)
{
    const auto a = verify_kosh_theta(KoshParam::finite(0.7), 1.3);
    const auto b = verify_kosh_theta(KoshParam::finite(0.7), 1.3);
    for (std::size_t i = 0; i < a.sides.size(); ++i) EXPECT_EQ(a.sides[i].value, b.sides[i].value);
}

TEST(Parse, ParamAndComplex)
{
    EXPECT_TRUE(parse_param("zero").is_zero());
    EXPECT_TRUE(parse_param("inf").is_infinity());
    EXPECT_EQ(parse_param("2.5").value(), 2.5);
    EXPECT_THROW(parse_param("-1"), domain_error);
    EXPECT_THROW(parse_param("abc"), domain_error);
    EXPECT_EQ(parse_complex("3+1i"), cplx(3.0, 1.0));
    EXPECT_EQ(parse_complex("4-2i"), cplx(4.0, -2.0));
    EXPECT_EQ(parse_complex("2.5"), cplx(2.5, 0.0));
    EXPECT_EQ(parse_complex("-i"), cplx(0.0, -1.0));
    EXPECT_EQ(parse_complex("1e-3+2e+1i"), cplx(1e-3, 20.0));
    EXPECT_EQ(parse_complex("0.5pi"), cplx(pi / 2.0, 0.0));
    EXPECT_THROW(parse_complex("3+xi"), domain_error);
    EXPECT_THROW(parse_complex(""), domain_error);
}
