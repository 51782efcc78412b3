#pragma once

// Verifiers for the modular relations and closed-form evaluations. Each side
// of an identity is evaluated on its own code path; a report records all
// sides and the deviation of each from the first.

#include <algorithm>
#include <atomic>
#include <cmath>
#include <complex>
#include <cstdio>
#include <functional>
#include <map>
#include <stdexcept>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include "classical.hpp"
#include "kzeta.hpp"
#include "param.hpp"
#include "quadrature.hpp"
#include "series.hpp"
#include "sigma.hpp"
#include "special.hpp"

namespace kosh {

struct Side {
    std::string label;
    cplx value;
    int group = 0; // sides are compared with the first side of the same group
};

/// A strict inequality lhs < rhs with a required margin.
struct InequalityCheck {
    std::string label;
    double lhs = 0.0;
    double rhs = 0.0;
    double min_margin = 0.0;
    bool ok() const { return rhs - lhs >= min_margin; }
};

struct Diagnostics {
    long terms = 0;
    long nodes = 0;
    double T = 0.0;
};

struct VerifyReport {
    std::string id;
    std::vector<std::pair<std::string, std::string>> params;
    std::vector<Side> sides;
    std::vector<InequalityCheck> checks;
    double max_abs_dev = 0.0;
    double max_rel_dev = 0.0;
    double tol = 0.0;
    bool pass = false;
    Diagnostics diag;
    std::string error; // set when evaluation failed to converge
};

/// Numerical settings shared by the verifiers.
struct VerifyOptions {
    double eps = 1e-13;  // quadrature tolerance
    double T_max = 60.0; // spectral truncation cap
};

inline constexpr double tol_series = 1e-8;
inline constexpr double tol_quadrature = 1e-6;
inline constexpr double tol_spectral = 1e-5;

namespace detail {

inline std::string fmt(double x)
{
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

inline std::string fmt(cplx z)
{
    if (z.imag() == 0.0) return fmt(z.real());
    char buf[80];
    std::snprintf(buf, sizeof buf, "%.17g%+.17gi", z.real(), z.imag());
    return buf;
}

/// Fills the deviations and the pass flag. Each side is compared with the
/// first side of its group; pass needs max_abs_dev <= tol or max_rel_dev <= tol,
/// every inequality to hold and every side to be finite.
inline void finalize(VerifyReport& r)
{
    r.max_abs_dev = 0.0;
    r.max_rel_dev = 0.0;
    std::map<int, std::size_t> first;
    bool finite = true;
    for (std::size_t i = 0; i < r.sides.size(); ++i) {
        const cplx v = r.sides[i].value;
        finite = finite && std::isfinite(v.real()) && std::isfinite(v.imag());
        const auto [it, fresh] = first.emplace(r.sides[i].group, i);
        if (fresh) continue;
        const cplx ref = r.sides[it->second].value;
        const double ad = std::abs(v - ref);
        const double scale = std::max(std::abs(ref), std::abs(v));
        r.max_abs_dev = std::max(r.max_abs_dev, ad);
        r.max_rel_dev = std::max(r.max_rel_dev, scale > 0.0 ? ad / scale : 0.0);
    }
    bool ok = finite && (r.max_abs_dev <= r.tol || r.max_rel_dev <= r.tol);
    for (const auto& c : r.checks) ok = ok && c.ok();
    r.pass = ok && r.error.empty();
}

inline VerifyReport start(std::string id, std::vector<std::pair<std::string, std::string>> params, double tol)
{
    VerifyReport r;
    r.id = std::move(id);
    r.params = std::move(params);
    r.tol = tol;
    return r;
}

/// |Gamma(z)|^2 for complex z.
inline double abs_gamma_sq(cplx z) { return std::exp(2.0 * lgamma(z).real()); }

/// Integral over [0, T] of a spectral integrand decaying like e^{-rate t};
/// T is where that decay reaches eps, capped at T_max.
template <class F>
QuadResult spectral_integral(F g, double rate, const VerifyOptions& o)
{
    const double T = std::min(o.T_max, (std::log(1.0 / o.eps) + 15.0) / rate);
    QuadSpec spec;
    spec.abs_tol = o.eps;
    spec.rel_tol = o.eps;
    spec.max_subdivisions = 20000;
    std::vector<double> pts;
    for (double t = 5.0; t < T; t += 5.0) pts.push_back(t);
    spec.split_points = pts;
    QuadResult r = integrate(g, 0.0, T, spec);
    r.truncation_T = T;
    return r;
}

/// sigma_p(2 pi t) + K(t) - (1 + B_0)/(2 pi t), finite at t = 0.
struct FBracket {
    KoshParam p;
    SigmaKernel S;
    explicit FBracket(KoshParam q) : p(q), S(q) {}
    double operator()(double t) const { return S.regular(2.0 * pi * t) + inv_sigma_exp_regular(p, t); }
};

} // namespace detail

// ---------------------------------------------------------------- F_p, G

/// F_p(n) from its real-variable form:
/// (pi^{3/2}/2) int_0^inf f(x e^n) (1/(e^{x e^{-n}} - 1) - e^n/x) dx, with
/// f(y) = sigma_p(y) + K(y/2pi) - (1+B_0)/y. Past X the exponentials are
/// below e^{-40} and the integrand is (1+B_0)/x^2, added in closed form.
inline QuadResult F_p_real(KoshParam p, double n, double eps = 1e-13)
{
    const double en = std::exp(n), emn = std::exp(-n);
    const detail::FBracket f(p);
    auto g = [&](double x) {
        const double y = x * en;
        return f(y / (2.0 * pi)) * bernoulli_kernel(x * emn);
    };
    const double X = 40.0 * std::max(en, 2.0 * emn);
    QuadSpec spec;
    spec.abs_tol = eps;
    spec.rel_tol = eps;
    spec.max_subdivisions = 20000;
    spec.split_points = {emn, en};
    if (p.is_finite()) spec.split_points.push_back(2.0 * pi * p.value() * emn);
    QuadResult r = integrate(g, 0.0, X, spec);
    r.value += (1.0 + p.b0()) / X;
    r.value *= 0.5 * std::pow(pi, 1.5);
    r.abs_err_estimate *= 0.5 * std::pow(pi, 1.5);
    r.truncation_T = X;
    return r;
}

/// F_p(n) = int_0^inf |Gamma((-1+it)/4)|^2 Xi_p(t/2) Xi(t/2) cos(n t)/(1+t^2) dt.
inline QuadResult F_p_spectral(KoshParam p, double n, const VerifyOptions& o = {})
{
    auto g = [&](double t) {
        return detail::abs_gamma_sq(cplx(-0.25, 0.25 * t)) * Xi_p(p, 0.5 * t) * classical_Xi(0.5 * t) * std::cos(n * t)
               / (1.0 + t * t);
    };
    return detail::spectral_integral(g, 0.5 * pi, o);
}

/// G(alpha) = int_0^inf (1/(t sqrt a)) (1/(e^{2 pi t/a} - 1) - a/(2 pi t) + e^{-t/a}/2) dt,
/// which vanishes for every alpha > 0.
inline double G_alpha(double alpha, double eps = 1e-14)
{
    if (!(alpha > 0.0)) throw domain_error("G_alpha: alpha must be > 0");
    const double sa = std::sqrt(alpha);
    auto g = [&](double t) {
        const double u = 2.0 * pi * t / alpha;
        return ((bernoulli_kernel(u) + 0.5) + 0.5 * std::expm1(-t / alpha)) / (t * sa);
    };
    const double X = 45.0 * alpha;
    QuadSpec spec;
    spec.abs_tol = eps;
    spec.rel_tol = eps;
    spec.split_points = {alpha};
    const double head = integrate(g, 0.0, X, spec).real();
    return head - sa / (2.0 * pi * X);
}

// ---------------------------------------------------------------- series identities

namespace detail {

inline double bernoulli_product_sum(const std::vector<double>& B, int m, double alpha, double beta)
{
    // sum_{j=0}^{m+1} (-1)^j B_{2j} B_{2m-2j+2} alpha^{m-j+1} beta^j / ((2j)! (2m-2j+2)!)
    double s = 0.0;
    for (int j = 0; j <= m + 1; ++j) {
        const double sign = (j % 2 == 0) ? 1.0 : -1.0;
        s += sign * B[std::size_t(j)] * B[std::size_t(m + 1 - j)] / (factorial(2 * j) * factorial(2 * m - 2 * j + 2))
             * std::pow(alpha, m - j + 1) * std::pow(beta, j);
    }
    return s;
}

inline std::vector<double> gen_bernoulli_list(KoshParam p, int kmax, double eps)
{
    std::vector<double> B;
    for (int k = 0; k <= kmax; ++k) B.push_back(gen_bernoulli(p, k, eps));
    return B;
}

} // namespace detail

/// alpha^{-m} {zeta_p(2m+1)/2 + S(alpha)} = (-beta)^{-m} {zeta_p(2m+1)/2 + S(beta)} - 2^{2m} P(alpha, beta),
/// alpha beta = pi^2.
inline VerifyReport verify_ramanujan_odd(KoshParam p, int m, double alpha, double tol = tol_series,
                                         const VerifyOptions& o = {})
{
    if (m == 0) throw domain_error("ramanujan-odd: m = 0 is the Dedekind-type case");
    if (!(alpha > 0.0)) throw domain_error("ramanujan-odd: alpha must be > 0");
    const double beta = pi * pi / alpha;
    auto r = detail::start("ramanujan-odd", {{"p", p.to_string()}, {"m", std::to_string(m)}, {"alpha", detail::fmt(alpha)}},
                           tol);
    const ZetaEval z = zeta_p(p, cplx(2.0 * m + 1.0));
    const double zh = 0.5 * z.value.real();
    const LambertSum La = lambert_sum(p, m, alpha), Lb = lambert_sum(p, m, beta);
    const double lhs = std::pow(alpha, -m) * (zh + La.value);
    const double bside = std::pow(-beta, -m) * (zh + Lb.value);
    double corr = 0.0;
    if (m >= -1) {
        const auto B = detail::gen_bernoulli_list(p, m + 1, o.eps);
        corr = std::ldexp(1.0, 2 * m) * detail::bernoulli_product_sum(B, m, alpha, beta);
    }
    r.sides = {{"alpha-side", lhs}, {"beta-side + correction", bside - corr}};
    if (m >= 1) r.sides.push_back({"beta-side", bside, 1});
    if (m >= 1) r.sides.push_back({"alpha-side + correction", lhs + corr, 1});
    r.diag.terms = La.terms_used + Lb.terms_used + z.trunc_terms;
    detail::finalize(r);
    return r;
}

/// zeta_p(4m+3) + 2 S_{2m+1}(pi) = -2^{4m+2} pi^{4m+3} sum_j (-1)^j B_{2j} B_{4m+4-2j}/((2j)!(4m+4-2j)!).
inline VerifyReport verify_lerch_gen(KoshParam p, int m, double tol = tol_series, const VerifyOptions& o = {})
{
    if (m < 0) throw domain_error("lerch-gen: m must be >= 0");
    auto r = detail::start("lerch-gen", {{"p", p.to_string()}, {"m", std::to_string(m)}}, tol);
    const int s = 4 * m + 3;
    const ZetaEval z = zeta_p(p, cplx(double(s)));
    const LambertSum L = lambert_sum(p, 2 * m + 1, pi);
    const double lhs = z.value.real() + 2.0 * L.value;
    const auto B = detail::gen_bernoulli_list(p, 2 * m + 2, o.eps);
    double sum = 0.0;
    for (int j = 0; j <= 2 * m + 2; ++j) {
        const double sign = (j % 2 == 0) ? 1.0 : -1.0;
        sum += sign * B[std::size_t(j)] * B[std::size_t(2 * m + 2 - j)] / (factorial(2 * j) * factorial(4 * m + 4 - 2 * j));
    }
    const double rhs = -std::ldexp(1.0, 4 * m + 2) * std::pow(pi, s) * sum;
    r.sides = {{"lhs", lhs}, {"rhs", rhs}};
    if (p.is_zero() && m <= 1) {
        // zeta(3) - (16/7) sum ... = pi^3/28 and zeta(7) - (256/127) sum ... = 7 pi^7/22860,
        // rescaled by (2^{4m+3} - 1).
        const double closed = m == 0 ? std::pow(pi, 3) / 28.0 : 7.0 * std::pow(pi, 7) / 22860.0;
        r.sides.push_back({"closed form", (std::ldexp(1.0, s) - 1.0) * closed});
    }
    r.diag.terms = L.terms_used + z.trunc_terms;
    detail::finalize(r);
    return r;
}

/// S_0(alpha) - S_0(beta) = (1 - (1-B_0)^3)(beta - alpha)/12 + log(alpha/beta)/4.
inline VerifyReport verify_dedekind(KoshParam p, double alpha, double tol = tol_series, const VerifyOptions& = {})
{
    if (!(alpha > 0.0)) throw domain_error("dedekind: alpha must be > 0");
    const double beta = pi * pi / alpha;
    auto r = detail::start("dedekind", {{"p", p.to_string()}, {"alpha", detail::fmt(alpha)}}, tol);
    const LambertSum La = lambert_sum(p, 0, alpha), Lb = lambert_sum(p, 0, beta);
    double coef;
    if (p.is_finite()) {
        const double u = 1.0 / (pi * p.value());
        coef = (1.0 + 3.0 * u * (1.0 + u)) / std::pow(1.0 + u, 3);
    } else {
        coef = p.is_infinity() ? 1.0 : 0.0;
    }
    const double rhs = coef * (beta - alpha) / 12.0 + 0.25 * std::log(alpha / beta);
    r.sides = {{"lhs", La.value - Lb.value}, {"rhs", rhs}};
    r.diag.terms = La.terms_used + Lb.terms_used;
    detail::finalize(r);
    return r;
}

/// alpha {zeta_p(-1)/2 + S^+_0(alpha)} = -beta {zeta_p(-1)/2 + S^+_0(beta)} - B_0^2/4.
inline VerifyReport verify_e2(KoshParam p, double alpha, double tol = tol_series, const VerifyOptions& = {})
{
    if (!(alpha > 0.0)) throw domain_error("e2: alpha must be > 0");
    const double beta = pi * pi / alpha;
    auto r = detail::start("e2", {{"p", p.to_string()}, {"alpha", detail::fmt(alpha)}}, tol);
    const ZetaEval z = zeta_p(p, cplx(-1.0));
    const double zh = 0.5 * z.value.real();
    const LambertSum La = lambert_sum_positive(p, 0, alpha), Lb = lambert_sum_positive(p, 0, beta);
    const double b0 = p.b0();
    r.sides = {{"alpha-side", alpha * (zh + La.value)}, {"rhs", -beta * (zh + Lb.value) - 0.25 * b0 * b0}};
    if (alpha == pi) {
        r.sides.push_back({"sum at alpha = pi", La.value, 1});
        r.sides.push_back({"-zeta_p(-1)/2 - B_0^2/(8 pi)", -zh - b0 * b0 / (8.0 * pi), 1});
        if (p.is_infinity()) r.sides.push_back({"1/24 - 1/(8 pi)", 1.0 / 24.0 - 1.0 / (8.0 * pi), 1});
        // the zero-limit sum runs over 2j-1 = 2 lambda_j with K = -1/(e^{x}+1)
        if (p.is_zero()) r.sides.push_back({"-(1/2)(1/24)", -0.5 / 24.0, 1});
    }
    r.diag.terms = La.terms_used + Lb.terms_used + z.trunc_terms;
    detail::finalize(r);
    return r;
}

/// sum_j w_j lambda_j^{2m+1} K(lambda_j) = -zeta_p(-2m-1)/2 for even m >= 0.
inline VerifyReport verify_glaisher_apostol(KoshParam p, int m, double tol = tol_series, const VerifyOptions& = {})
{
    if (m < 0 || m % 2 != 0) throw domain_error("glaisher-apostol: m must be an even integer >= 0");
    auto r = detail::start("glaisher-apostol", {{"p", p.to_string()}, {"m", std::to_string(m)}}, tol);
    const LambertSum L = lambert_sum_positive(p, m, pi);
    double rhs_val;
    if (m == 0) {
        // the m = 0 case carries the extra -B_0^2/(8 pi)
        const double b0 = p.b0();
        rhs_val = -0.5 * zeta_p(p, cplx(-1.0)).value.real() - b0 * b0 / (8.0 * pi);
    } else {
        rhs_val = -0.5 * zeta_p(p, cplx(-2.0 * m - 1.0)).value.real();
    }
    r.sides = {{"sum", L.value}, {"rhs", rhs_val}};
    const double Bm = bernoulli_b2k(m + 1) / (4.0 * m + 4.0);
    if (m > 0 && p.is_infinity()) r.sides.push_back({"B_{2m+2}/(4m+4)", Bm});
    if (m > 0 && p.is_zero())
        r.sides.push_back({"-2^{-2m-1}(2^{2m+1}-1)B_{2m+2}/(4m+4)", -std::ldexp(1.0, -2 * m - 1) * (std::ldexp(1.0, 2 * m + 1) - 1.0) * Bm});
    r.diag.terms = L.terms_used;
    detail::finalize(r);
    return r;
}

// ---------------------------------------------------------------- relations for sums of Phi_p

namespace detail {

inline double page220_side(KoshParam p, double x, double c12, double eps)
{
    const double b0 = p.b0();
    const double sum = p.is_zero() ? tau_sum(x) : phi_sum(p, x, eps);
    return std::sqrt(x) * ((c12 - (1.0 + b0) * std::log(2.0 * pi * x)) / (2.0 * x) + sum);
}

} // namespace detail

inline VerifyReport verify_page220(KoshParam p, double alpha, double tol = tol_quadrature, const VerifyOptions& o = {},
                                   bool with_spectral = false)
{
    if (!(alpha > 0.0)) throw domain_error("page220: alpha must be > 0");
    const double beta = 1.0 / alpha;
    auto r = detail::start("page220", {{"p", p.to_string()}, {"alpha", detail::fmt(alpha)}}, tol);
    const double c12 = euler_const_1(p, o.eps) + euler_const_2(p, o.eps);
    r.sides.push_back({"alpha-side", detail::page220_side(p, alpha, c12, o.eps)});
    r.sides.push_back({"beta-side", detail::page220_side(p, beta, c12, o.eps)});
    const QuadResult F = F_p_real(p, 0.5 * std::abs(std::log(alpha)), o.eps);
    r.sides.push_back({"-(2/pi^{3/2}) F_p real form", -2.0 / std::pow(pi, 1.5) * F.real()});
    r.diag.nodes = F.nodes_used;
    r.diag.T = F.truncation_T;
    if (with_spectral) {
        const QuadResult S = F_p_spectral(p, 0.5 * std::log(alpha), o);
        r.sides.push_back({"-(2/pi^{3/2}) F_p spectral", -2.0 / std::pow(pi, 1.5) * S.real()});
        r.diag.nodes += S.nodes_used;
        r.diag.T = S.truncation_T;
    }
    detail::finalize(r);
    return r;
}

namespace detail {

/// int_0^inf |Gamma((-1+it)/4)|^2 Xi(t/2)^2 cos(t log(alpha)/2) c(t)/(1+t^2) dt.
template <class C>
QuadResult xi_squared_integral(double alpha, C c, const VerifyOptions& o)
{
    auto g = [&](double t) {
        const double X = classical_Xi(0.5 * t);
        return abs_gamma_sq(cplx(-0.25, 0.25 * t)) * X * X * std::cos(0.5 * t * std::log(alpha)) * c(t) / (1.0 + t * t);
    };
    return spectral_integral(g, 0.5 * pi, o);
}

} // namespace detail

/// The combination of the classical page-220 relation at 2 alpha, alpha/2 and
/// alpha; the Omega relation; and the two digamma-series inequalities.
inline VerifyReport verify_p220_combination(double alpha, double tol = tol_spectral, const VerifyOptions& o = {})
{
    if (!(alpha > 0.0)) throw domain_error("page220-combination: alpha must be > 0");
    const double beta = 1.0 / alpha;
    auto r = detail::start("page220-combination", {{"alpha", detail::fmt(alpha)}}, tol);
    const double g = euler_gamma, l2 = std::log(2.0), r2 = std::sqrt(2.0);
    auto H_def = [&](double a) {
        const double consts = (std::sqrt(2.0 * a) * (g - std::log(4.0 * pi * a)) / (4.0 * a)
                               + std::sqrt(0.5 * a) * (g - std::log(pi * a)) / a)
                                  / r2
                              - std::sqrt(a) * (g - std::log(2.0 * pi * a)) / (2.0 * a);
        const double sums = (std::sqrt(2.0 * a) * classical_phi_sum(2.0 * a) + std::sqrt(0.5 * a) * classical_phi_sum(0.5 * a)) / r2
                            - std::sqrt(a) * classical_phi_sum(a);
        return consts + sums;
    };
    auto H_tau = [&](double a) { return 0.5 * std::sqrt(a) * ((g - std::log(pi * a)) / (2.0 * a) + tau_sum(a)); };
    const QuadResult Hs = detail::xi_squared_integral(
        alpha, [&](double t) { return r2 * std::cos(0.5 * t * l2) - 1.0; }, o);
    r.sides.push_back({"H(alpha) from phi sums", H_def(alpha), 0});
    r.sides.push_back({"H(beta) from phi sums", H_def(beta), 0});
    r.sides.push_back({"H(alpha) from tau sum", H_tau(alpha), 0});
    r.sides.push_back({"H spectral", -Hs.real() / std::pow(pi, 1.5), 0});

    auto O_side = [&](double a) {
        return std::sqrt(a) * ((3.0 * g - 2.0 * l2 - 3.0 * std::log(pi * a)) / (2.0 * a) + omega_sum(a));
    };
    const QuadResult Os = detail::xi_squared_integral(alpha, [&](double t) { return std::cos(0.5 * t * l2); }, o);
    r.sides.push_back({"Omega alpha-side", O_side(alpha), 1});
    r.sides.push_back({"Omega beta-side", O_side(beta), 1});
    r.sides.push_back({"Omega spectral", -2.0 * r2 / std::pow(pi, 1.5) * Os.real(), 1});

    r.checks.push_back({"sum{2psi(4n)+psi(n)+3/(4n)-log(16n^3)} < (log(32pi^3)-3gamma)/4", omega_sum(2.0),
                        (std::log(32.0 * std::pow(pi, 3)) - 3.0 * g) / 4.0, 1e-3});
    r.checks.push_back({"sum{2psi(n)+psi(n/4)+3/n-log(n^3/4)} < log(pi^3/2)-3gamma", omega_sum(0.5),
                        std::log(std::pow(pi, 3) / 2.0) - 3.0 * g, 1e-3});
    r.diag.nodes = Hs.nodes_used + Os.nodes_used;
    r.diag.T = Hs.truncation_T;
    detail::finalize(r);
    return r;
}

// ---------------------------------------------------------------- Koshliakov relations

/// a^{3/2} int x e^{-a^2 x^2} {K(x) + sigma_p(2 pi x) - (1+B_0)/(2 pi x)} dx
/// = same at b = pi/a = -(1/8) pi^{-7/4} int Xi_p(t/2) |Gamma(-1/4+it/4)|^2 cos(t log(sqrt(pi)/a)/2) dt.
inline VerifyReport verify_kosh_theta(KoshParam p, double a, double tol = tol_spectral, const VerifyOptions& o = {})
{
    if (!(a > 0.0)) throw domain_error("kosh-theta: a must be > 0");
    const double b = pi / a;
    auto r = detail::start("kosh-theta", {{"p", p.to_string()}, {"a", detail::fmt(a)}}, tol);
    const detail::FBracket f(p);
    auto side = [&](double c, long& nodes) {
        auto g = [&](double x) { return x * std::exp(-c * c * x * x) * f(x); };
        QuadSpec spec;
        spec.abs_tol = o.eps;
        spec.rel_tol = o.eps;
        spec.horizon = Horizon::automatic(o.eps * 1e-3);
        spec.split_points = {1.0 / c};
        if (p.is_finite()) spec.split_points.push_back(p.value());
        const QuadResult q = integrate_semi_infinite(g, spec);
        nodes += q.nodes_used;
        return std::pow(c, 1.5) * q.real();
    };
    long nodes = 0;
    r.sides.push_back({"a-side", side(a, nodes)});
    r.sides.push_back({"b-side", side(b, nodes)});
    const double l = std::log(std::sqrt(pi) / a), l2 = std::log(2.0);
    auto g = [&](double t) {
        const double X = p.is_zero() ? classical_Xi(0.5 * t) * (std::sqrt(2.0) * std::cos(0.5 * t * l2) - 1.0)
                                     : Xi_p(p, 0.5 * t);
        return X * detail::abs_gamma_sq(cplx(-0.25, 0.25 * t)) * std::cos(0.5 * t * l);
    };
    const QuadResult S = detail::spectral_integral(g, 3.0 * pi / 8.0, o);
    r.sides.push_back({"spectral", -0.125 * std::pow(pi, -1.75) * S.real()});
    r.diag.nodes = nodes + S.nodes_used;
    r.diag.T = S.truncation_T;
    detail::finalize(r);
    return r;
}

/// Phi_p(x) + (1+B_0)/(2x) = -2 int_0^inf t f_p(t)/(t^2+x^2) dt, f_p the bracket
/// sigma_p(2 pi t) + K(t) - (1+B_0)/(2 pi t). Past X the kernels are below e^{-40}
/// and t f_p(t) = -(1+B_0)/(2 pi), integrated in closed form.
inline double capital_phi_regular(KoshParam p, double x, double eps = 1e-13)
{
    if (!(x > 0.0)) throw domain_error("capital_phi_regular: x must be > 0");
    if (p.is_zero()) return 0.5 * (digamma(1.0 + 0.5 * x) - digamma(0.5 * (1.0 + x))) + digamma(x + 0.5) - std::log(x);
    if (p.is_infinity()) return 2.0 * (digamma(x + 1.0) - std::log(x));
    const detail::FBracket f(p);
    auto g = [&](double t) { return t * f(t) / (t * t + x * x); };
    const double X = 40.0 / pi + 1.0;
    QuadSpec spec;
    spec.abs_tol = eps;
    spec.rel_tol = eps;
    spec.split_points = {x, p.value()};
    const double head = integrate(g, 0.0, X, spec).real();
    return -2.0 * head + (1.0 + p.b0()) / pi * std::atan(x / X) / x;
}

/// sqrt(a) int e^{-a^2 x^2} {psi_{1,p} + psi_{2,p} + 2 e^{2 pi p} Q_{2 pi p}(0) B_0 + 2/x - (1+B_0) log x} dx
/// = same at b = pi/a = 4 pi^{1/4} int Xi_p(t/2)/(t^2+1) cos(t log(sqrt(pi)/a)/2)/cosh(pi t/2) dt.
inline VerifyReport verify_kosh_hardy(KoshParam p, double a, double tol = tol_spectral, const VerifyOptions& o = {})
{
    if (!(a > 0.0)) throw domain_error("kosh-hardy: a must be > 0");
    const double b = pi / a;
    auto r = detail::start("kosh-hardy", {{"p", p.to_string()}, {"a", detail::fmt(a)}}, tol);
    // the braces equal Phi_p(x) + (1+B_0)/(2x); x = y^2 absorbs the log at 0
    const double inner_eps = std::max(o.eps, 1e-12);
    auto side = [&](double c, long& nodes) {
        auto g = [&](double y) {
            const double x = y * y;
            return 2.0 * y * std::exp(-c * c * x * x) * capital_phi_regular(p, x, inner_eps);
        };
        QuadSpec spec;
        spec.abs_tol = 1e-10;
        spec.rel_tol = 1e-10;
        spec.horizon = Horizon::automatic(1e-14);
        spec.split_points = {1.0 / std::sqrt(c)};
        const QuadResult q = integrate_semi_infinite(g, spec);
        nodes += q.nodes_used;
        return std::sqrt(c) * q.real();
    };
    long nodes = 0;
    r.sides.push_back({"a-side", side(a, nodes)});
    r.sides.push_back({"b-side", side(b, nodes)});
    const double l = std::log(std::sqrt(pi) / a), l2 = std::log(2.0);
    auto g = [&](double t) {
        const double X = p.is_zero() ? classical_Xi(0.5 * t) * (std::sqrt(2.0) * std::cos(0.5 * t * l2) - 1.0)
                                     : Xi_p(p, 0.5 * t);
        return X / (t * t + 1.0) * std::cos(0.5 * t * l) / std::cosh(0.5 * pi * t);
    };
    const QuadResult S = detail::spectral_integral(g, 5.0 * pi / 8.0, o);
    r.sides.push_back({"spectral", 4.0 * std::pow(pi, 0.25) * S.real()});
    r.diag.nodes = nodes + S.nodes_used;
    r.diag.T = S.truncation_T;
    detail::finalize(r);
    return r;
}

// ---------------------------------------------------------------- zeta-level identities

/// eta_p(s) = 2 (2pi)^{s-1} Gamma(1-s) sin(pi s/2) zeta_p(1-s), with zeta_p(1-s)
/// taken from the contour integral and, separately, from Euler-Maclaurin.
inline VerifyReport verify_functional_eq(KoshParam p, cplx s, double tol = tol_quadrature, const VerifyOptions& o = {})
{
    auto r = detail::start("functional-eq", {{"p", p.to_string()}, {"s", detail::fmt(s)}}, tol);
    const ZetaEval e = eta_p(p, s);
    const cplx f = detail::reflection_factor(s);
    r.sides.push_back({"eta_p(s)", e.value});
    if (p.is_finite()) {
        const ZetaEval zc = zeta_p_contour(p, 1.0 - s, std::max(o.eps, 1e-13));
        r.sides.push_back({"factor * zeta_p(1-s) contour", f * zc.value});
        r.diag.nodes = zc.trunc_terms;
    }
    const ZetaEval ze = zeta_p_series_em(p, 1.0 - s);
    r.sides.push_back({"factor * zeta_p(1-s) series", f * ze.value});
    r.diag.terms = e.trunc_terms + ze.trunc_terms;
    detail::finalize(r);
    return r;
}

/// int_0^inf x^{s-1} sigma_p(x) dx = Gamma(s) zeta_p(s), and the companion for K and eta_p.
inline VerifyReport verify_mellin(KoshParam p, cplx s, double tol = tol_series, const VerifyOptions& o = {})
{
    if (!(s.real() > 0.0) || s == cplx(1.0)) throw domain_error("mellin-334: needs Re s > 0, s != 1");
    auto r = detail::start("mellin-334", {{"p", p.to_string()}, {"s", detail::fmt(s)}}, tol);
    const cplx g = gamma(s);
    const ZetaEval zm = zeta_p_mellin(p, s, o.eps), zs = zeta_p(p, s);
    r.sides.push_back({"int x^{s-1} sigma_p(x) dx", g * zm.value, 0});
    r.sides.push_back({"Gamma(s) zeta_p(s)", g * zs.value, 0});
    const ZetaEval em = eta_p_mellin(p, s, o.eps), es = eta_p(p, s);
    r.sides.push_back({"(2pi)^s int x^{s-1} K(x) dx", g * em.value, 1});
    r.sides.push_back({"Gamma(s) eta_p(s)", g * es.value, 1});
    r.diag.nodes = zm.trunc_terms + em.trunc_terms;
    r.diag.terms = zs.trunc_terms + es.trunc_terms;
    detail::finalize(r);
    return r;
}

/// eta_p(-(2k-1)) = -B_{2k}^{(p)}/(2k), and the trivial zero eta_p(-2k) = 0.
inline VerifyReport verify_eta_trivial(KoshParam p, int k, double tol = tol_series, const VerifyOptions& o = {})
{
    if (k < 1) throw domain_error("eta-trivial-values: k must be >= 1");
    auto r = detail::start("eta-trivial-values", {{"p", p.to_string()}, {"k", std::to_string(k)}}, tol);
    const ZetaEval e = eta_p(p, cplx(-(2.0 * k - 1.0)));
    r.sides.push_back({"eta_p(-(2k-1))", e.value, 0});
    r.sides.push_back({"-B_{2k}^{(p)}/(2k)", -gen_bernoulli(p, k, o.eps) / (2.0 * k), 0});
    r.sides.push_back({"eta_p(-2k)", eta_p(p, cplx(-2.0 * k)).value, 1});
    r.sides.push_back({"0", 0.0, 1});
    r.diag.terms = e.trunc_terms;
    detail::finalize(r);
    return r;
}

// ---------------------------------------------------------------- registry

using ParamMap = std::map<std::string, std::string>;

struct Profile {
    std::string name;
    double eps;       // quadrature tolerance
    double tol_scale; // multiplies each identity's default tolerance
    double T_max;     // spectral cap
};

inline Profile profile_by_name(const std::string& name)
{
    if (name == "fast") return {"fast", 1e-10, 100.0, 40.0};
    if (name == "desk") return {"desk", 1e-13, 1.0, 60.0};
    if (name == "deep") return {"deep", 1e-14, 1.0, 60.0};
    throw domain_error("unknown profile '" + name + "' (expected fast, desk or deep)");
}

namespace detail {

inline const std::string& require(const ParamMap& m, const std::string& key)
{
    auto it = m.find(key);
    if (it == m.end()) throw domain_error("missing parameter --" + key);
    return it->second;
}

inline double parse_real(const std::string& s)
{
    if (s == "pi") return pi;
    std::size_t pos = 0;
    double v;
    try {
        v = std::stod(s, &pos);
    } catch (const std::exception&) {
        throw domain_error("cannot parse number '" + s + "'");
    }
    // allow "<x>pi" as a multiple of pi
    const std::string rest = s.substr(pos);
    if (rest == "pi" || rest == "*pi") return v * pi;
    if (!rest.empty()) throw domain_error("cannot parse number '" + s + "'");
    return v;
}

inline long parse_int(const std::string& s)
{
    std::size_t pos = 0;
    long v;
    try {
        v = std::stol(s, &pos);
    } catch (const std::exception&) {
        throw domain_error("cannot parse integer '" + s + "'");
    }
    if (pos != s.size()) throw domain_error("cannot parse integer '" + s + "'");
    return v;
}

} // namespace detail

/// p as a decimal, or "zero" / "inf".
inline KoshParam parse_param(const std::string& s)
{
    if (s == "zero" || s == "0") return KoshParam::zero();
    if (s == "inf" || s == "infinity") return KoshParam::infinity();
    const double v = detail::parse_real(s);
    if (!(v > 0.0)) throw domain_error("p must be > 0, 'zero' or 'inf'");
    return KoshParam::finite(v);
}

/// "a", "a+bi", "a-bi", "bi".
inline cplx parse_complex(std::string s)
{
    s.erase(std::remove(s.begin(), s.end(), ' '), s.end());
    if (s.empty()) throw domain_error("empty complex number");
    if (s.back() != 'i' || (s.size() >= 2 && s[s.size() - 2] == 'p')) return detail::parse_real(s);
    const std::string body = s.substr(0, s.size() - 1);
    std::size_t split = std::string::npos;
    for (std::size_t i = body.size(); i-- > 1;)
        if ((body[i] == '+' || body[i] == '-') && body[i - 1] != 'e' && body[i - 1] != 'E') {
            split = i;
            break;
        }
    auto imag_of = [](const std::string& t) {
        if (t.empty() || t == "+") return 1.0;
        if (t == "-") return -1.0;
        return detail::parse_real(t);
    };
    if (split == std::string::npos) return cplx(0.0, imag_of(body));
    return cplx(detail::parse_real(body.substr(0, split)), imag_of(body.substr(split)));
}

struct RegistryEntry {
    std::string id;
    std::vector<std::string> param_names;
    double default_tol;
    std::function<VerifyReport(const ParamMap&, double tol, const VerifyOptions&)> run;
    std::vector<ParamMap> suite_cases;
};

inline const std::vector<RegistryEntry>& registry()
{
    using detail::parse_int;
    using detail::parse_real;
    using detail::require;
    static const std::vector<RegistryEntry> entries = {
        {"ramanujan-odd", {"p", "m", "alpha"}, tol_series,
         [](const ParamMap& m, double tol, const VerifyOptions& o) {
             return verify_ramanujan_odd(parse_param(require(m, "p")), int(parse_int(require(m, "m"))),
                                         parse_real(require(m, "alpha")), tol, o);
         },
         {{{"p", "1"}, {"m", "2"}, {"alpha", "1.3"}},
          {{"p", "zero"}, {"m", "1"}, {"alpha", "0.5pi"}},
          {{"p", "inf"}, {"m", "1"}, {"alpha", "pi"}},
          {{"p", "0.5"}, {"m", "-3"}, {"alpha", "2"}}}},
        {"lerch-gen", {"p", "m"}, tol_series,
         [](const ParamMap& m, double tol, const VerifyOptions& o) {
             return verify_lerch_gen(parse_param(require(m, "p")), int(parse_int(require(m, "m"))), tol, o);
         },
         {{{"p", "zero"}, {"m", "0"}}, {{"p", "zero"}, {"m", "1"}}, {{"p", "inf"}, {"m", "0"}}, {{"p", "1"}, {"m", "0"}},
          {{"p", "1"}, {"m", "1"}}}},
        {"dedekind", {"p", "alpha"}, tol_series,
         [](const ParamMap& m, double tol, const VerifyOptions& o) {
             return verify_dedekind(parse_param(require(m, "p")), parse_real(require(m, "alpha")), tol, o);
         },
         {{{"p", "inf"}, {"alpha", "pi"}}, {{"p", "zero"}, {"alpha", "2"}}, {{"p", "1"}, {"alpha", "1.5"}}}},
        {"e2", {"p", "alpha"}, tol_series,
         [](const ParamMap& m, double tol, const VerifyOptions& o) {
             return verify_e2(parse_param(require(m, "p")), parse_real(require(m, "alpha")), tol, o);
         },
         {{{"p", "inf"}, {"alpha", "pi"}}, {{"p", "zero"}, {"alpha", "pi"}}, {{"p", "1"}, {"alpha", "2"}},
          {{"p", "1"}, {"alpha", "pi"}}}},
        {"glaisher-apostol", {"p", "m"}, tol_series,
         [](const ParamMap& m, double tol, const VerifyOptions& o) {
             return verify_glaisher_apostol(parse_param(require(m, "p")), int(parse_int(require(m, "m"))), tol, o);
         },
         {{{"p", "inf"}, {"m", "2"}}, {{"p", "zero"}, {"m", "2"}}, {{"p", "1"}, {"m", "2"}}, {{"p", "1"}, {"m", "0"}}}},
        {"page220", {"p", "alpha"}, tol_quadrature,
         [](const ParamMap& m, double tol, const VerifyOptions& o) {
             const bool spec = m.count("spectral") && m.at("spectral") != "0";
             return verify_page220(parse_param(require(m, "p")), parse_real(require(m, "alpha")), tol, o, spec);
         },
         {{{"p", "inf"}, {"alpha", "1"}}, {{"p", "zero"}, {"alpha", "2"}}, {{"p", "1"}, {"alpha", "1.5"}},
          {{"p", "5"}, {"alpha", "0.5"}}}},
        {"page220-combination", {"alpha"}, tol_spectral,
         [](const ParamMap& m, double tol, const VerifyOptions& o) {
             return verify_p220_combination(parse_real(require(m, "alpha")), tol, o);
         },
         {{{"alpha", "2"}}, {{"alpha", "1"}}}},
        {"kosh-theta", {"p", "a"}, tol_spectral,
         [](const ParamMap& m, double tol, const VerifyOptions& o) {
             return verify_kosh_theta(parse_param(require(m, "p")), parse_real(require(m, "a")), tol, o);
         },
         {{{"p", "1"}, {"a", "1"}}, {{"p", "zero"}, {"a", "1.7724538509055159"}}, {{"p", "zero"}, {"a", "1"}}}},
        {"kosh-hardy", {"p", "a"}, tol_spectral,
         [](const ParamMap& m, double tol, const VerifyOptions& o) {
             return verify_kosh_hardy(parse_param(require(m, "p")), parse_real(require(m, "a")), tol, o);
         },
         {{{"p", "1"}, {"a", "1"}}, {{"p", "zero"}, {"a", "1"}}}},
        {"functional-eq", {"p", "s"}, tol_quadrature,
         [](const ParamMap& m, double tol, const VerifyOptions& o) {
             return verify_functional_eq(parse_param(require(m, "p")), parse_complex(require(m, "s")), tol, o);
         },
         {{{"p", "1"}, {"s", "3+1i"}}, {{"p", "0.5"}, {"s", "2.5"}}, {{"p", "5"}, {"s", "4-2i"}}}},
        {"mellin-334", {"p", "s"}, tol_series,
         [](const ParamMap& m, double tol, const VerifyOptions& o) {
             return verify_mellin(parse_param(require(m, "p")), parse_complex(require(m, "s")), tol, o);
         },
         {{{"p", "1"}, {"s", "2"}}, {{"p", "1"}, {"s", "2.5"}}, {{"p", "1"}, {"s", "3"}}}},
        {"eta-trivial-values", {"p", "k"}, tol_series,
         [](const ParamMap& m, double tol, const VerifyOptions& o) {
             return verify_eta_trivial(parse_param(require(m, "p")), int(parse_int(require(m, "k"))), tol, o);
         },
         {{{"p", "1"}, {"k", "1"}}, {{"p", "0.5"}, {"k", "2"}}, {{"p", "5"}, {"k", "3"}}}},
    };
    return entries;
}

inline const RegistryEntry* find_entry(const std::string& id)
{
    for (const auto& e : registry())
        if (e.id == id) return &e;
    return nullptr;
}

/// Runs one registered identity. Non-convergence is recorded in the report
/// (error set, pass false); unknown ids and bad parameters throw domain_error.
inline VerifyReport run_identity(const std::string& id, const ParamMap& params, const Profile& prof,
                                 double tol_override = 0.0)
{
    const RegistryEntry* e = find_entry(id);
    if (!e) throw domain_error("unknown identity id '" + id + "'");
    const double tol = tol_override > 0.0 ? tol_override : e->default_tol * prof.tol_scale;
    const VerifyOptions o{prof.eps, prof.T_max};
    try {
        return e->run(params, tol, o);
    } catch (const convergence_error& err) {
        VerifyReport r;
        r.id = id;
        for (const auto& [k, v] : params) r.params.push_back({k, v});
        r.tol = tol;
        r.error = err.what();
        r.pass = false;
        return r;
    }
}

struct SuiteJob {
    std::string id;
    ParamMap params;
};

inline std::vector<SuiteJob> suite_jobs()
{
    std::vector<SuiteJob> jobs;
    for (const auto& e : registry())
        for (const auto& c : e.suite_cases) jobs.push_back({e.id, c});
    return jobs;
}

/// Runs jobs on a worker pool; the result order is the job order.
inline std::vector<VerifyReport> run_jobs(const std::vector<SuiteJob>& jobs, const Profile& prof, unsigned threads = 0)
{
    if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
    threads = std::min<unsigned>(threads, unsigned(std::max<std::size_t>(1, jobs.size())));
    std::vector<VerifyReport> out(jobs.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i; (i = next.fetch_add(1)) < jobs.size();) out[i] = run_identity(jobs[i].id, jobs[i].params, prof);
    };
    if (threads == 1) {
        worker();
        return out;
    }
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
    return out;
}

inline std::vector<VerifyReport> run_suite(const Profile& prof, unsigned threads = 0)
{
    return run_jobs(suite_jobs(), prof, threads);
}

} // namespace kosh
