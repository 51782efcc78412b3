#pragma once

// Generalized Euler constants and Bernoulli numbers, the incomplete gamma
// function Q_mu(s), and the digamma-type functions psi_{n,p}, phi_{n,p}.

#include <cmath>
#include <complex>
#include <vector>

#include "classical.hpp"
#include "param.hpp"
#include "quadrature.hpp"
#include "sigma.hpp"

namespace kosh {

namespace detail {

inline QuadSpec special_spec(double eps)
{
    QuadSpec s;
    s.abs_tol = eps;
    s.rel_tol = eps;
    s.horizon = Horizon::automatic(eps * 1e-3);
    return s;
}

inline std::vector<double> finite_split(KoshParam p, double scale)
{
    if (p.is_finite()) return {scale * p.value()};
    return {};
}

} // namespace detail

/// C_p^{(1)} = int_0^inf (sigma_p(t) - e^{-t}/t) dt.
inline double euler_const_1(KoshParam p, double eps = 1e-13)
{
    if (p.is_infinity()) return euler_gamma;
    if (p.is_zero()) return euler_gamma + std::log(4.0);
    const SigmaKernel S(p);
    // sigma_p(t) - e^{-t}/t = (sigma_p(t) - 1/t) + (1 - e^{-t})/t
    auto f = [&](double t) { return S.regular(t) - std::expm1(-t) / t; };
    QuadSpec spec = detail::special_spec(eps);
    spec.split_points = {1.0};
    return integrate_semi_infinite(f, spec).real();
}

/// C_p^{(2)} = int_0^inf (K(x/2pi) - B_0 e^{-x}/x) dx.
inline double euler_const_2(KoshParam p, double eps = 1e-13)
{
    if (p.is_infinity()) return euler_gamma;
    if (p.is_zero()) return -std::log(2.0);
    const double b0 = p.b0();
    auto f = [&](double x) { return inv_sigma_exp_regular(p, x / (2.0 * pi)) - b0 * std::expm1(-x) / x; };
    QuadSpec spec = detail::special_spec(eps);
    spec.split_points = detail::finite_split(p, 2.0 * pi);
    return integrate_semi_infinite(f, spec).real();
}

/// B_{2k}^{(p)}: B_0 in closed form, otherwise (-1)^{k+1} 4k int_0^inf x^{2k-1} sigma_p(2 pi x) dx.
inline double gen_bernoulli(KoshParam p, int k, double eps = 1e-13)
{
    if (k < 0) throw domain_error("gen_bernoulli: k must be >= 0");
    if (k == 0) return p.b0();
    if (p.is_infinity()) return bernoulli_b2k(k);
    if (p.is_zero()) return (std::ldexp(1.0, 2 * k) - 1.0) * bernoulli_b2k(k);
    const SigmaKernel S(p);
    auto f = [&](double x) { return std::pow(x, 2 * k - 1) * S(2.0 * pi * x); };
    QuadSpec spec = detail::special_spec(eps);
    spec.split_points = {1.0, double(k)};
    const double sign = (k % 2 == 1) ? 1.0 : -1.0;
    return sign * 4.0 * k * integrate_semi_infinite(f, spec).real();
}

struct GenConstants {
    KoshParam p = KoshParam::infinity();
    double c1 = 0.0;
    double c2 = 0.0;
    std::vector<double> bernoulli; // B_0^{(p)}, B_2^{(p)}, ...
};

inline GenConstants gen_constants(KoshParam p, int kmax = 3, double eps = 1e-13)
{
    GenConstants g;
    g.p = p;
    g.c1 = euler_const_1(p, eps);
    g.c2 = euler_const_2(p, eps);
    for (int k = 0; k <= kmax; ++k) g.bernoulli.push_back(gen_bernoulli(p, k, eps));
    return g;
}

/// Q_mu(s) = int_mu^inf e^{-t} t^{s-1} dt.
inline cplx incomplete_gamma_Q(double mu, cplx s)
{
    if (!(mu > 0.0)) throw domain_error("incomplete_gamma_Q: mu must be > 0");
    if (mu >= 1.0) {
        // e^{-mu} mu^s / (mu+1-s - 1(1-s)/(mu+3-s - 2(2-s)/(mu+5-s - ...))), modified Lentz
        const double tiny = 1e-300;
        auto guard = [tiny](cplx z) { return std::abs(z) < tiny ? cplx(tiny) : z; };
        cplx f = guard(mu + 1.0 - s), c = f, d = 0.0;
        for (int i = 1; i < 100000; ++i) {
            const cplx an = -double(i) * (double(i) - s);
            const cplx bn = mu + 2.0 * i + 1.0 - s;
            d = 1.0 / guard(bn + an * d);
            c = guard(bn + an / c);
            const cplx del = c * d;
            f *= del;
            if (std::abs(del - 1.0) < 1e-16) return std::exp(-mu + s * std::log(mu)) / f;
        }
        throw convergence_error("incomplete_gamma_Q: continued fraction did not converge");
    }
    // t = e^v on [log mu, inf)
    const double v0 = std::log(mu);
    auto f = [&](double v) { return std::exp(s * (v0 + v) - std::exp(v0 + v)); };
    QuadSpec spec = detail::special_spec(1e-15);
    spec.split_points = {-v0};
    return integrate_semi_infinite(f, spec).value;
}

/// e^{mu} Q_mu(0) without the overflow of the separate factors.
inline double scaled_Q0(double mu)
{
    if (!(mu > 0.0)) throw domain_error("scaled_Q0: mu must be > 0");
    return exp_e1(mu);
}

/// Ramanujan's phi(x) = psi(x) + 1/(2x) - log x.
inline double classical_phi(double x)
{
    if (!(x > 0.0)) throw domain_error("classical_phi: x must be > 0");
    return digamma(x) + 0.5 / x - std::log(x);
}

inline double classical_psi(double x) { return digamma(x); }

/// phi_{1,p}(x) = -2 int_0^inf t K(t)/(t^2+x^2) dt.
inline double phi_1p(KoshParam p, double x, double eps = 1e-13)
{
    if (!(x > 0.0)) throw domain_error("phi_1p: x must be > 0");
    if (p.is_infinity()) return classical_phi(x);
    if (p.is_zero()) return digamma(x + 0.5) - std::log(x);
    auto f = [&](double t) {
        // t K(t) stays finite at 0
        return t * inv_sigma_exp(p, t) / (t * t + x * x);
    };
    QuadSpec spec = detail::special_spec(eps);
    spec.abs_tol = eps / (12.0 * x * x);
    spec.split_points = {p.value(), x};
    return -2.0 * integrate_semi_infinite(f, spec).real();
}

/// phi_{2,p}(x) = -2 int_0^inf t sigma_p(2 pi t)/(t^2+x^2) dt.
inline double phi_2p(KoshParam p, double x, double eps = 1e-13)
{
    if (!(x > 0.0)) throw domain_error("phi_2p: x must be > 0");
    if (p.is_infinity()) return classical_phi(x);
    if (p.is_zero()) return -0.5 / x + 0.5 * (digamma(0.5 * x + 1.0) - digamma(0.5 * (x + 1.0)));
    const SigmaKernel S(p);
    auto f = [&](double t) { return t * S(2.0 * pi * t) / (t * t + x * x); };
    QuadSpec spec = detail::special_spec(eps);
    spec.abs_tol = eps / (x * x);
    spec.split_points = {x};
    return -2.0 * integrate_semi_infinite(f, spec).real();
}

/// -phi_{1,p}(x) through its Laplace form int_0^inf (sigma_p(t) - 1/t + B_0/2) e^{-xt} dt.
inline double phi_1p_laplace(KoshParam p, double x, double eps = 1e-13)
{
    if (!(x > 0.0)) throw domain_error("phi_1p_laplace: x must be > 0");
    const SigmaKernel S(p);
    const double h = 0.5 * p.b0();
    auto f = [&](double t) { return (S.regular(t) + h) * std::exp(-x * t); };
    QuadSpec spec = detail::special_spec(eps);
    spec.split_points = {1.0};
    return -integrate_semi_infinite(f, spec).real();
}

/// -phi_{2,p}(x) through int_0^inf (K(t/2pi) - B_0/t + 1/2) e^{-xt} dt.
inline double phi_2p_laplace(KoshParam p, double x, double eps = 1e-13)
{
    if (!(x > 0.0)) throw domain_error("phi_2p_laplace: x must be > 0");
    auto f = [&](double t) { return (inv_sigma_exp_regular(p, t / (2.0 * pi)) + 0.5) * std::exp(-x * t); };
    QuadSpec spec = detail::special_spec(eps);
    spec.split_points = detail::finite_split(p, 2.0 * pi);
    return -integrate_semi_infinite(f, spec).real();
}

/// psi_{1,p}(x) = phi_{1,p}(x) - (1 - B_0/2)/x + log x.
inline double psi_1p(KoshParam p, double x, double eps = 1e-13)
{
    return phi_1p(p, x, eps) - (1.0 - 0.5 * p.b0()) / x + std::log(x);
}

/// psi_{2,p}(x) = phi_{2,p}(x) - 2 e^{2 pi p} Q_{2 pi p}(0) B_0 - 1/(2x) + B_0 log x.
inline double psi_2p(KoshParam p, double x, double eps = 1e-13)
{
    if (!(x > 0.0)) throw domain_error("psi_2p: x must be > 0");
    if (p.is_infinity()) return digamma(x);
    if (p.is_zero()) return -1.0 / x + 0.5 * (digamma(0.5 * x + 1.0) - digamma(0.5 * (x + 1.0)));
    const double b0 = p.b0();
    return phi_2p(p, x, eps) - 2.0 * scaled_Q0(2.0 * pi * p.value()) * b0 - 0.5 / x + b0 * std::log(x);
}

/// tau(x) = (psi(1+x/2) - psi((1+x)/2))/2 + psi(x+1/2) - 1/(2x) - log x.
inline double tau(double x)
{
    if (!(x > 0.0)) throw domain_error("tau: x must be > 0");
    return 0.5 * (digamma(1.0 + 0.5 * x) - digamma(0.5 * (1.0 + x))) + digamma(x + 0.5) - 0.5 / x - std::log(x);
}

/// Phi_p = phi_{1,p} + phi_{2,p}; tau at p = 0 and 2 phi at p = inf.
inline double capital_phi(KoshParam p, double x, double eps = 1e-13)
{
    if (!(x > 0.0)) throw domain_error("capital_phi: x must be > 0");
    if (p.is_zero()) return tau(x);
    if (p.is_infinity()) return 2.0 * classical_phi(x);
    return phi_1p(p, x, eps) + phi_2p(p, x, eps);
}

/// Omega(x) = 2 psi(2x) + psi(x/2) + 3/(2x) - 3 log x - log 2.
inline double omega_fn(double x)
{
    if (!(x > 0.0)) throw domain_error("omega_fn: x must be > 0");
    return 2.0 * digamma(2.0 * x) + digamma(0.5 * x) + 1.5 / x - 3.0 * std::log(x) - std::log(2.0);
}

} // namespace kosh
