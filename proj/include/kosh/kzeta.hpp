#pragma once

// zeta_p, eta_p, omega_p, xi_p, Xi_p and the classical comparators.

#include <algorithm>
#include <cmath>
#include <complex>
#include <string>

#include "classical.hpp"
#include "param.hpp"
#include "quadrature.hpp"
#include "roots.hpp"
#include "sigma.hpp"
#include "taylor.hpp"

namespace kosh {

enum class Method { series, continuation, contour, functional_eq, mellin, closed_form };

inline std::string to_string(Method m)
{
    switch (m) {
    case Method::series: return "series";
    case Method::continuation: return "continuation";
    case Method::contour: return "contour";
    case Method::functional_eq: return "functional_eq";
    case Method::mellin: return "mellin";
    default: return "closed_form";
    }
}

struct ZetaEval {
    cplx value = 0.0;
    Method method = Method::closed_form;
    long trunc_terms = 0;
    double err_estimate = 0.0;
};

inline constexpr double default_eps = 1e-15;

namespace detail {

inline void check_not_one(cplx s, const char* who)
{
    if (s == cplx(1.0, 0.0)) throw domain_error(std::string(who) + ": pole at s = 1");
}

/// Mean of f over a circle; equals f(center) for f analytic on the closed disk.
template <class F>
cplx circle_mean(F f, cplx center, double r, int n = 16)
{
    cplx acc = 0.0;
    for (int k = 0; k < n; ++k) acc += f(center + r * std::polar(1.0, 2.0 * pi * (k + 0.5) / n));
    return acc / double(n);
}

inline cplx cpow(double x, cplx s) { return std::exp(s * std::log(x)); }

/// 2 sin(pi s/2) Gamma(1-s) (2 pi)^{s-1}, the reflection factor shared by
/// both directions of the functional equation; logs keep large |Im s| finite.
inline cplx reflection_factor(cplx s)
{
    if (std::abs(s.imag()) < 20.0)
        return 2.0 * std::sin(0.5 * pi * s) * std::exp(lgamma(1.0 - s) + (s - 1.0) * std::log(2.0 * pi));
    return 2.0 * std::exp(log_sin_pi(0.5 * s) + lgamma(1.0 - s) + (s - 1.0) * std::log(2.0 * pi));
}

} // namespace detail

/// Euler-Maclaurin evaluation of sum_j w_j lambda_j^{-s}: explicit terms below
/// N, then the tail in the variable u with u(lambda_j) = j. Valid as an
/// analytic continuation for Re s > 1 - 2*30, s != 1.
inline ZetaEval zeta_p_series_em(KoshParam p, cplx s, double eps = default_eps)
{
    detail::check_not_one(s, "zeta_p");
    const long N = std::max(20L, long(std::ceil(std::abs(s) + 10.0)));
    constexpr std::size_t kmax = 30, order = 2 * kmax - 1;
    auto tab = shared_table(p, std::size_t(N));
    cplx head = 0.0;
    for (long j = N - 2; j >= 0; --j)
        head += tab->weights[std::size_t(j)] * detail::cpow(tab->lambdas[std::size_t(j)], -s);
    const LambdaJet& jet = shared_jet(p, N, order);
    const double lamN = jet.lambda[0];
    Taylor<cplx> G = jet.weight.cast<cplx>() * exp(log(jet.lambda).cast<cplx>() * (-s));
    cplx tail = detail::cpow(lamN, 1.0 - s) / (s - 1.0) + 0.5 * G[0];
    double last = 0.0, prev = std::numeric_limits<double>::infinity();
    long used = 0;
    for (std::size_t k = 1; k <= kmax; ++k) {
        const cplx term = bernoulli_even[k] / double(2 * k) * G[2 * k - 1];
        const double mag = std::abs(term);
        if (mag > prev) break; // asymptotic: stop at the smallest term
        tail -= term;
        last = mag;
        prev = mag;
        used = long(k);
        if (mag <= 0.01 * eps * std::abs(head + tail)) break;
    }
    ZetaEval r;
    r.value = head + tail;
    r.method = s.real() > 1.0 ? Method::series : Method::continuation;
    r.trunc_terms = N - 1 + used;
    r.err_estimate = last + 1e-16 * std::abs(r.value) * double(N);
    return r;
}

/// zeta_p through the two vertical-line integrals from alpha = lambda_1/2.
/// Independent of the series; loses accuracy like e^{pi |Im s|}.
inline ZetaEval zeta_p_contour(KoshParam p, cplx s, double eps = 1e-13)
{
    detail::check_not_one(s, "zeta_p_contour");
    const double alpha = 0.5 * solve_eigenvalue(p, 1);
    const cplx I(0.0, 1.0);
    auto g = [&](double y) {
        const cplx a = -I * std::exp(-s * std::log(cplx(alpha, -y))) * inv_sigma_exp(p, cplx(y, alpha));
        const cplx b = I * std::exp(-s * std::log(cplx(alpha, y))) * inv_sigma_exp(p, cplx(y, -alpha));
        return a + b;
    };
    QuadSpec spec;
    spec.abs_tol = eps;
    spec.rel_tol = eps;
    spec.horizon = Horizon::automatic(eps * 1e-3);
    QuadResult q = integrate_vertical_line(g, spec);
    ZetaEval r;
    r.value = detail::cpow(alpha, 1.0 - s) / (s - 1.0) + q.value;
    r.method = Method::contour;
    r.trunc_terms = q.nodes_used;
    r.err_estimate = q.abs_err_estimate;
    return r;
}

/// (1/Gamma(s)) int_0^inf e^{-x} ((k nu - x)/(k nu + x))^k x^{s-1} dx, Re s > 0.
inline cplx kernel_snu(cplx s, double nu, long k, double eps = 1e-14)
{
    if (k < 1) throw domain_error("kernel_snu: k must be >= 1");
    if (!(nu >= 0.0)) throw domain_error("kernel_snu: nu must be >= 0");
    if (std::isinf(nu)) return 1.0;
    if (nu == 0.0) return (k % 2 == 0) ? 1.0 : -1.0;
    if (!(s.real() > 0.0)) throw domain_error("kernel_snu: integral form needs Re s > 0");
    const double a = double(k) * nu;
    // x = y^q makes the origin regular when Re s < 1.
    const int q = std::clamp(int(std::ceil(1.0 / s.real())), 1, 8);
    auto f = [&](double y) -> cplx {
        const double x = q == 1 ? y : std::pow(y, q);
        double mag;
        double sign = 1.0;
        if (x < a) {
            mag = -2.0 * double(k) * std::atanh(x / a);
        } else {
            mag = x == a ? -std::numeric_limits<double>::infinity() : -2.0 * double(k) * std::atanh(a / x);
            if (k % 2 == 1) sign = -1.0;
        }
        const cplx xs = std::exp((double(q) * s - 1.0) * std::log(y));
        return sign * double(q) * std::exp(mag - x) * xs;
    };
    eps = std::max(eps, 1e-14);
    QuadSpec spec;
    spec.rel_tol = eps;
    spec.abs_tol = eps * std::exp(std::lgamma(s.real()));
    spec.split_points = {q == 1 ? a : std::pow(a, 1.0 / q)};
    const QuadResult r = integrate_semi_infinite(f, spec);
    return r.value / gamma(s);
}

/// eta_p(s) = sum_k (s, 2 pi p k)_k / k^s for Re s > 1. Terms k >= N use the
/// large-k expansion of the kernel summed with Hurwitz zeta.
inline ZetaEval eta_p_series(KoshParam p, cplx s, double eps = default_eps)
{
    detail::check_not_one(s, "eta_p");
    if (!(s.real() > 1.0)) throw domain_error("eta_p_series: needs Re s > 1");
    ZetaEval r;
    r.method = Method::series;
    if (p.is_infinity()) {
        r.value = riemann_zeta(s);
        return r;
    }
    if (p.is_zero()) {
        r.value = (detail::cpow(2.0, 1.0 - s) - 1.0) * riemann_zeta(s);
        return r;
    }
    const double nu = 2.0 * pi * p.value();
    const long N = std::clamp(long(std::ceil(100.0 * std::pow((std::abs(s) + 12.0) / (nu + 2.0), 1.5))), 32L, 4000L);
    cplx head = 0.0;
    for (long k = N - 1; k >= 1; --k) head += kernel_snu(s, nu, k, 0.1 * eps) * detail::cpow(double(k), -s);
    const double c = 1.0 + 2.0 / nu, u = 1.0 / (c * nu);
    cplx P[10];
    P[0] = 1.0;
    for (int n = 1; n < 10; ++n) P[n] = P[n - 1] * (s + double(n - 1));
    const cplx cs = detail::cpow(c, -s);
    const cplx A0 = cs;
    const cplx A2 = cs * (-2.0 / 3.0) * P[3] * std::pow(u, 3);
    const cplx A4 = cs * ((2.0 / 9.0) * P[6] * std::pow(u, 6) - 0.4 * P[5] * std::pow(u, 5));
    const cplx A6 = cs * (-(4.0 / 81.0) * P[9] * std::pow(u, 9) + (4.0 / 15.0) * P[8] * std::pow(u, 8)
                          - (2.0 / 7.0) * P[7] * std::pow(u, 7));
    const double Nd = double(N);
    const cplx tail = A0 * hurwitz_zeta(s, Nd) + A2 * hurwitz_zeta(s + 2.0, Nd) + A4 * hurwitz_zeta(s + 4.0, Nd)
                      + A6 * hurwitz_zeta(s + 6.0, Nd);
    r.value = head + tail;
    r.trunc_terms = N - 1;
    r.err_estimate = std::abs(A6 * hurwitz_zeta(s + 6.0, Nd)) / (Nd * Nd) + 1e-16 * std::abs(r.value) * 10.0;
    return r;
}

/// zeta_p(s) for any s != 1: series for Re s > 1, Euler-Maclaurin continuation
/// on 0 <= Re s <= 1, the functional equation for Re s < 0.
inline ZetaEval zeta_p(KoshParam p, cplx s, double eps = default_eps);

/// eta_p(s) for any s != 1: series for Re s > 1, else the functional equation.
inline ZetaEval eta_p(KoshParam p, cplx s, double eps = default_eps)
{
    detail::check_not_one(s, "eta_p");
    if (p.is_infinity() || p.is_zero()) {
        ZetaEval r;
        r.method = Method::closed_form;
        r.value = p.is_infinity() ? riemann_zeta(s) : (detail::cpow(2.0, 1.0 - s) - 1.0) * riemann_zeta(s);
        return r;
    }
    if (s.real() > 1.0) return eta_p_series(p, s, eps);
    ZetaEval r;
    r.method = Method::functional_eq;
    if (std::abs(s) < 0.01) {
        // removable point: sin(pi s/2) zeta_p(1-s) at s = 0
        r.value = detail::circle_mean([&](cplx z) { return eta_p(p, z, eps).value; }, s, 0.05);
        return r;
    }
    // eta_p(s) = 2 (2pi)^{s-1} Gamma(1-s) sin(pi s/2) zeta_p(1-s)
    const ZetaEval z = zeta_p(p, 1.0 - s, eps);
    const cplx f = detail::reflection_factor(s);
    r.value = f * z.value;
    r.trunc_terms = z.trunc_terms;
    r.err_estimate = std::abs(f) * z.err_estimate;
    return r;
}

inline ZetaEval zeta_p(KoshParam p, cplx s, double eps)
{
    detail::check_not_one(s, "zeta_p");
    ZetaEval r;
    if (p.is_infinity() || p.is_zero()) {
        r.method = Method::closed_form;
        r.value = p.is_infinity() ? riemann_zeta(s) : (detail::cpow(2.0, s) - 1.0) * riemann_zeta(s);
        return r;
    }
    if (s == cplx(0.0, 0.0)) {
        r.method = Method::closed_form;
        r.value = -0.5 * p.b0();
        return r;
    }
    if (s.real() >= 0.0) return zeta_p_series_em(p, s, eps);
    // zeta_p(s) = 2 sin(pi s/2) Gamma(1-s) (2pi)^{s-1} eta_p(1-s)
    const ZetaEval e = eta_p_series(p, 1.0 - s, eps);
    const cplx f = detail::reflection_factor(s);
    r.method = Method::functional_eq;
    r.value = f * e.value;
    r.trunc_terms = e.trunc_terms;
    r.err_estimate = std::abs(f) * e.err_estimate;
    return r;
}

/// Gamma(s) zeta_p(s) = int_0^inf x^{s-1} sigma_p(x) dx, continued to Re s > 0
/// by subtracting 1/x on (0, 1).
inline ZetaEval zeta_p_mellin(KoshParam p, cplx s, double eps = 1e-13)
{
    detail::check_not_one(s, "zeta_p_mellin");
    if (!(s.real() > 0.0)) throw domain_error("zeta_p_mellin: needs Re s > 0");
    const SigmaKernel S(p);
    const int q = std::clamp(int(std::ceil(1.0 / s.real())), 2, 8);
    auto inner = [&](double y) -> cplx {
        const double x = std::pow(y, q);
        return double(q) * std::exp((double(q) * s - 1.0) * std::log(y)) * S.regular(x);
    };
    auto outer = [&](double x) -> cplx { return std::exp((s - 1.0) * std::log(x)) * S(x); };
    QuadSpec spec;
    spec.abs_tol = eps;
    spec.rel_tol = eps;
    const QuadResult a = integrate(inner, 0.0, 1.0, spec);
    auto shifted = [&](double x) { return outer(1.0 + x); };
    spec.horizon = Horizon::automatic(eps * 1e-3);
    const QuadResult b = integrate_semi_infinite(shifted, spec);
    ZetaEval r;
    r.value = (a.value + b.value + 1.0 / (s - 1.0)) / gamma(s);
    r.method = Method::mellin;
    r.trunc_terms = a.nodes_used + b.nodes_used;
    r.err_estimate = (a.abs_err_estimate + b.abs_err_estimate) / std::abs(gamma(s));
    return r;
}

/// Gamma(s) eta_p(s) (2pi)^{-s} = int_0^inf x^{s-1} K(x) dx, continued to
/// Re s > 0 by subtracting B_0/(2 pi x) on (0, 1).
inline ZetaEval eta_p_mellin(KoshParam p, cplx s, double eps = 1e-13)
{
    detail::check_not_one(s, "eta_p_mellin");
    if (!(s.real() > 0.0)) throw domain_error("eta_p_mellin: needs Re s > 0");
    const int q = std::clamp(int(std::ceil(1.0 / s.real())), 2, 8);
    auto inner = [&](double y) -> cplx {
        const double x = std::pow(y, q);
        return double(q) * std::exp((double(q) * s - 1.0) * std::log(y)) * inv_sigma_exp_regular(p, x);
    };
    auto outer = [&](double x) -> cplx {
        const double t = 1.0 + x;
        return std::exp((s - 1.0) * std::log(t)) * inv_sigma_exp(p, t);
    };
    QuadSpec spec;
    spec.abs_tol = eps;
    spec.rel_tol = eps;
    if (p.is_finite() && p.value() < 1.0) spec.split_points = {std::pow(p.value(), 1.0 / q)};
    const QuadResult a = integrate(inner, 0.0, 1.0, spec);
    spec.split_points.clear();
    if (p.is_finite() && p.value() > 1.0) spec.split_points = {p.value() - 1.0};
    spec.horizon = Horizon::automatic(eps * 1e-3);
    const QuadResult b = integrate_semi_infinite(outer, spec);
    const cplx g = gamma(s);
    ZetaEval r;
    r.value = (a.value + b.value + p.b0() / (2.0 * pi) / (s - 1.0)) * std::exp(s * std::log(2.0 * pi)) / g;
    r.method = Method::mellin;
    r.trunc_terms = a.nodes_used + b.nodes_used;
    r.err_estimate = (a.abs_err_estimate + b.abs_err_estimate) * std::abs(std::exp(s * std::log(2.0 * pi)) / g);
    return r;
}

/// (zeta_p + eta_p)/2.
inline cplx omega_p(KoshParam p, cplx s, double eps = default_eps)
{
    detail::check_not_one(s, "omega_p");
    if (p.is_infinity()) return riemann_zeta(s);
    if (p.is_zero()) return (detail::cpow(2.0, s - 1.0) + detail::cpow(2.0, -s) - 1.0) * riemann_zeta(s);
    return 0.5 * (zeta_p(p, s, eps).value + eta_p(p, s, eps).value);
}

/// xi_p(s) = (s-1) pi^{-s/2} Gamma(1+s/2) omega_p(s); entire.
inline cplx xi_p(KoshParam p, cplx s, double eps = default_eps)
{
    if (std::abs(s - 1.0) < 0.05)
        return detail::circle_mean([&](cplx z) { return xi_p(p, z, eps); }, s, 0.1);
    return (s - 1.0) * std::exp(-0.5 * s * std::log(pi) + lgamma(1.0 + 0.5 * s)) * omega_p(p, s, eps);
}

inline double Xi_p(KoshParam p, double t, double eps = default_eps)
{
    return xi_p(p, cplx(0.5, t), eps).real();
}

inline cplx classical_zeta(cplx s) { return riemann_zeta(s); }

/// Riemann xi(s) = (s-1) pi^{-s/2} Gamma(1+s/2) zeta(s).
inline cplx classical_xi(cplx s)
{
    if (std::abs(s - 1.0) < 0.05)
        return detail::circle_mean([&](cplx z) { return classical_xi(z); }, s, 0.1);
    return (s - 1.0) * std::exp(-0.5 * s * std::log(pi) + lgamma(1.0 + 0.5 * s)) * riemann_zeta(s);
}

inline double classical_Xi(double t) { return classical_xi(cplx(0.5, t)).real(); }

} // namespace kosh
