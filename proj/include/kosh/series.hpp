#pragma once

// Lambert-type eigen sums and the sums of Phi_p(n alpha).

#include <cmath>
#include <functional>
#include <vector>

#include "classical.hpp"
#include "kzeta.hpp"
#include "param.hpp"
#include "quadrature.hpp"
#include "roots.hpp"
#include "sigma.hpp"
#include "special.hpp"

namespace kosh {

struct LambertSum {
    KoshParam p = KoshParam::infinity();
    int exponent = 0;   // power of lambda_j in each term
    double scale = 0.0; // alpha
    double value = 0.0;
    long terms_used = 0;
    double tail_bound = 0.0;
};

/// sum_j w_j lambda_j^e K(lambda_j alpha/pi), K(t) = 1/(sigma(t) e^{2 pi t} - 1).
/// Stops once the geometric bound on the remainder is below eps |sum|.
inline LambertSum lambert_sum_exponent(KoshParam p, int e, double alpha, double eps = 1e-16)
{
    if (!(alpha > 0.0)) throw domain_error("lambert_sum: alpha must be > 0");
    if (!(eps > 0.0)) throw domain_error("lambert_sum: eps must be > 0");
    LambertSum r;
    r.p = p;
    r.exponent = e;
    r.scale = alpha;
    // |K(t)| <= 1/(e^{2 pi t} - 1), w_j <= 1, and lambda_{j+1} - lambda_j <= 3/2, so past
    // lambda >= 3 max(e,0)/alpha successive bounds shrink by at least q.
    const double q = std::exp(-0.5 * alpha);
    const double lam_mono = std::max(1.0, 3.0 * std::max(e, 0) / alpha);
    auto tab = shared_table(p, 256);
    double sum = 0.0;
    for (std::size_t j = 0;; ++j) {
        if (j >= tab->size()) tab = shared_table(p, 2 * tab->size());
        const double lam = tab->lambdas[j];
        const double pw = std::pow(lam, double(e));
        sum += tab->weights[j] * pw * inv_sigma_exp(p, lam * alpha / pi);
        const double bound = pw / std::expm1(2.0 * alpha * lam) * q / (1.0 - q);
        if (lam >= lam_mono && (bound <= eps * std::abs(sum) || bound < 1e-300)) {
            r.terms_used = long(j) + 1;
            r.tail_bound = bound;
            break;
        }
        if (j > 10000000) throw convergence_error("lambert_sum: no convergence");
    }
    r.value = sum;
    return r;
}

/// sum_j w_j lambda_j^{-2m-1} / (sigma(lambda_j alpha/pi) e^{2 alpha lambda_j} - 1).
inline LambertSum lambert_sum(KoshParam p, int m, double alpha, double eps = 1e-16)
{
    return lambert_sum_exponent(p, -2 * m - 1, alpha, eps);
}

/// Same with lambda_j^{2m+1}, m >= 0.
inline LambertSum lambert_sum_positive(KoshParam p, int m, double alpha, double eps = 1e-16)
{
    if (m < 0) throw domain_error("lambert_sum_positive: m must be >= 0");
    return lambert_sum_exponent(p, 2 * m + 1, alpha, eps);
}

/// sum_{n>=1} f(n alpha) when f(x) ~ sum_k a[k-1] x^{-2k}: explicit terms below N,
/// the expansion summed with Hurwitz zeta beyond. err gets the first omitted
/// order estimated from the last coefficient.
inline double asymptotic_tail_sum(const std::function<double(double)>& f, double alpha,
                                  const std::vector<double>& a, long N, double* err = nullptr)
{
    if (!(alpha > 0.0)) throw domain_error("asymptotic_tail_sum: alpha must be > 0");
    double head = 0.0;
    for (long n = N - 1; n >= 1; --n) head += f(double(n) * alpha);
    double tail = 0.0, last = 0.0;
    for (std::size_t k = 1; k <= a.size(); ++k) {
        last = a[k - 1] * std::pow(alpha, -2.0 * double(k)) * hurwitz_zeta(cplx(2.0 * double(k)), double(N)).real();
        tail += last;
    }
    if (err) *err = std::abs(last) / (double(N) * alpha) + 1e-16 * std::abs(head) * std::sqrt(double(N));
    return head + tail;
}

/// Coefficients of Phi_p(x) ~ sum_k a_k x^{-2k}:
/// a_k = -4 (-1)^{k-1} (2k-1)! (2 pi)^{-2k} omega_p(2k).
inline std::vector<double> capital_phi_asymptotics(KoshParam p, int K, double eps = default_eps)
{
    std::vector<double> a;
    for (int k = 1; k <= K; ++k) {
        const double w = omega_p(p, cplx(2.0 * k), eps).real();
        const double sign = (k % 2 == 1) ? 1.0 : -1.0;
        a.push_back(-4.0 * sign * factorial(2 * k - 1) * std::pow(2.0 * pi, -2.0 * k) * w);
    }
    return a;
}

/// sum_{n>=1} phi(n alpha) for Ramanujan's phi(x) = psi(x) + 1/(2x) - log x.
inline double classical_phi_sum(double alpha)
{
    std::vector<double> a;
    for (int k = 1; k <= 8; ++k) a.push_back(-bernoulli_b2k(k) / (2.0 * k));
    const long N = long(std::ceil(25.0 / alpha)) + 1;
    return asymptotic_tail_sum(classical_phi, alpha, a, N);
}

/// sum_{n>=1} tau(n alpha).
inline double tau_sum(double alpha)
{
    const long N = long(std::ceil(25.0 / alpha)) + 1;
    return asymptotic_tail_sum(tau, alpha, capital_phi_asymptotics(KoshParam::zero(), 8), N);
}

/// sum_{n>=1} Omega(n alpha). Omega(x) = 2 phi(2x) + phi(x/2), so
/// Omega(x) ~ -sum_k B_{2k}/(2k) (2^{1-2k} + 2^{2k}) x^{-2k}.
inline double omega_sum(double alpha)
{
    std::vector<double> a;
    for (int k = 1; k <= 8; ++k)
        a.push_back(-bernoulli_b2k(k) / (2.0 * k) * (std::ldexp(1.0, 1 - 2 * k) + std::ldexp(1.0, 2 * k)));
    const long N = long(std::ceil(60.0 / alpha)) + 1;
    return asymptotic_tail_sum(omega_fn, alpha, a, N);
}

/// sum_{n>=1} Phi_p(n alpha) term by term, with the asymptotic tail.
inline double phi_sum_termwise(KoshParam p, double alpha, double eps = 1e-13, double* err = nullptr)
{
    if (!(alpha > 0.0)) throw domain_error("phi_sum: alpha must be > 0");
    if (p.is_infinity()) return 2.0 * classical_phi_sum(alpha);
    if (p.is_zero()) return tau_sum(alpha);
    const long N = long(std::ceil(30.0 / alpha)) + 1;
    auto f = [&](double x) { return capital_phi(p, x, eps); };
    return asymptotic_tail_sum(f, alpha, capital_phi_asymptotics(p, 5), N, err);
}

/// sum_{n>=1} Phi_p(n alpha) as one integral:
/// -(2 pi/alpha) int_0^inf (K(t) + sigma_p(2 pi t)) (1/(e^{2 pi t/alpha} - 1) - alpha/(2 pi t) + 1/2) dt.
inline QuadResult phi_sum_integral(KoshParam p, double alpha, double eps = 1e-13)
{
    if (!(alpha > 0.0)) throw domain_error("phi_sum: alpha must be > 0");
    const SigmaKernel S(p);
    auto f = [&](double t) {
        const double g = bernoulli_kernel(2.0 * pi * t / alpha) + 0.5;
        return (inv_sigma_exp(p, t) + S(2.0 * pi * t)) * g;
    };
    QuadSpec spec;
    spec.abs_tol = eps * std::min(1.0, alpha * alpha);
    spec.rel_tol = eps;
    spec.horizon = Horizon::automatic(eps * 1e-3);
    spec.split_points = {alpha};
    if (p.is_finite()) spec.split_points.push_back(p.value());
    QuadResult r = integrate_semi_infinite(f, spec);
    r.value *= -2.0 * pi / alpha;
    r.abs_err_estimate *= 2.0 * pi / alpha;
    return r;
}

inline double phi_sum(KoshParam p, double alpha, double eps = 1e-13)
{
    return phi_sum_integral(p, alpha, eps).real();
}

} // namespace kosh
