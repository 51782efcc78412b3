#pragma once

// Classical special functions used as factors, limits and oracles:
// Bernoulli numbers, complex log-gamma, digamma, Riemann and Hurwitz zeta,
// exponential integral.

#include <algorithm>
#include <array>
#include <cmath>
#include <complex>
#include <limits>
#include <stdexcept>
#include <vector>

#include "param.hpp"

namespace kosh {

/// Even Bernoulli numbers B_0, B_2, ..., B_60.
inline constexpr std::array<double, 31> bernoulli_even = {
    1.0,
    0.16666666666666666,
    -0.033333333333333333,
    0.023809523809523808,
    -0.033333333333333333,
    0.07575757575757576,
    -0.2531135531135531,
    1.1666666666666667,
    -7.0921568627450977,
    54.971177944862156,
    -529.12424242424242,
    6192.123188405797,
    -86580.253113553117,
    1425517.1666666667,
    -27298231.067816094,
    601580873.9006424,
    -15116315767.092157,
    429614643061.16669,
    -13711655205088.332,
    488332318973593.19,
    -19296579341940068.0,
    8.4169304757368256e+17,
    -4.0338071854059454e+19,
    2.1150748638081993e+21,
    -1.2086626522296526e+23,
    7.5008667460769642e+24,
    -5.0387781014810688e+26,
    3.6528776484818122e+28,
    -2.8498769302450882e+30,
    2.3865427499683627e+32,
    -2.1399949257225335e+34,
};

/// B_{2k}; throws past the table.
inline double bernoulli_b2k(int k)
{
    if (k < 0 || k >= int(bernoulli_even.size())) throw domain_error("bernoulli_b2k: index out of table");
    return bernoulli_even[std::size_t(k)];
}

inline double factorial(int n)
{
    double r = 1.0;
    for (int i = 2; i <= n; ++i) r *= i;
    return r;
}

/// 1/(e^x - 1) - 1/x, finite at x = 0 (value -1/2).
inline double bernoulli_kernel(double x)
{
    if (std::abs(x) < 0.5) {
        // sum_{k>=1} B_{2k} x^{2k-1}/(2k)!
        double r = -0.5, xp = x, f = 2.0;
        for (int k = 1; k <= 12; ++k) {
            r += bernoulli_even[std::size_t(k)] * xp / f;
            xp *= x * x;
            f *= double(2 * k + 1) * double(2 * k + 2);
        }
        return r;
    }
    if (x > 700.0) return -1.0 / x;
    return 1.0 / std::expm1(x) - 1.0 / x;
}

/// e^x - 1 - x without cancellation.
inline double expm1_minus_x(double x)
{
    if (std::abs(x) < 0.5) {
        double term = x * x / 2.0, sum = term;
        for (int k = 3; k < 30 && std::abs(term) > 1e-18 * std::abs(sum); ++k) {
            term *= x / k;
            sum += term;
        }
        return sum;
    }
    return std::expm1(x) - x;
}

namespace detail {

/// log(sin(pi z)) on a branch chosen for continuity in Im z; safe for large |Im z|.
inline cplx log_sin_pi(cplx z)
{
    const cplx I(0.0, 1.0);
    if (std::abs(z.imag()) < 20.0) return std::log(std::sin(pi * z));
    if (z.imag() > 0.0) {
        // sin(pi z) = e^{-i pi z}(1 - e^{2 i pi z})/(2i)
        return -I * pi * z + std::log((1.0 - std::exp(2.0 * I * pi * z)) / (2.0 * I));
    }
    return std::conj(log_sin_pi(std::conj(z)));
}

inline cplx lgamma_stirling(cplx z)
{
    const cplx zi = 1.0 / z, zi2 = zi * zi;
    cplx sum = 0.0, zp = zi;
    for (int k = 1; k <= 12; ++k) {
        sum += bernoulli_even[std::size_t(k)] / (2.0 * k * (2.0 * k - 1.0)) * zp;
        zp *= zi2;
    }
    return (z - 0.5) * std::log(z) - z + 0.5 * std::log(2.0 * pi) + sum;
}

} // namespace detail

/// log Gamma(z). The imaginary part is continuous away from the negative
/// real axis; only exp() of the result is relied upon across branches.
inline cplx lgamma(cplx z)
{
    if (z.real() <= 0.0 && z.imag() == 0.0 && z.real() == std::floor(z.real()))
        throw domain_error("lgamma: pole at nonpositive integer");
    if (z.real() < 0.5) return std::log(pi) - detail::log_sin_pi(z) - lgamma(1.0 - z);
    cplx shift = 0.0;
    while (std::abs(z) < 15.0) {
        shift += std::log(z);
        z += 1.0;
    }
    return detail::lgamma_stirling(z) - shift;
}

inline cplx gamma(cplx z) { return std::exp(lgamma(z)); }

/// Real digamma: recurrence up to x >= 10, then the asymptotic series.
inline double digamma(double x)
{
    if (x <= 0.0 && x == std::floor(x)) throw domain_error("digamma: pole at nonpositive integer");
    if (x < 0.0) return digamma(1.0 - x) - pi / std::tan(pi * x);
    double acc = 0.0;
    while (x < 10.0) {
        acc -= 1.0 / x;
        x += 1.0;
    }
    const double xi2 = 1.0 / (x * x);
    double s = 0.0, xp = xi2;
    for (int k = 1; k <= 7; ++k) {
        s += bernoulli_even[std::size_t(k)] / (2.0 * k) * xp;
        xp *= xi2;
    }
    return acc + std::log(x) - 0.5 / x - s;
}

namespace detail {

/// Borwein's alternating-series algorithm for Re s >= 1/2, s != 1.
inline cplx zeta_borwein(cplx s)
{
    // Truncation error ~ e^{pi|t|}(3+sqrt 8)^{-n}.
    const double t = std::abs(s.imag());
    const int n = std::max(30, int(std::ceil((pi * t + 40.0) / std::log(3.0 + std::sqrt(8.0)))));
    // d_k = n sum_{i<=k} (n+i-1)! 4^i / ((n-i)!(2i)!)
    std::vector<double> d(std::size_t(n) + 1);
    double term = 1.0 / n, sum = term;
    d[0] = n * sum;
    for (int i = 1; i <= n; ++i) {
        term *= 4.0 * double(n + i - 1) * double(n - i + 1) / (double(2 * i - 1) * double(2 * i));
        sum += term;
        d[std::size_t(i)] = n * sum;
    }
    const double dn = d[std::size_t(n)];
    cplx acc = 0.0;
    for (int k = n - 1; k >= 0; --k) {
        const double sign = (k % 2 == 0) ? 1.0 : -1.0;
        acc += sign * (d[std::size_t(k)] - dn) / dn * std::exp(-s * std::log(double(k + 1)));
    }
    return -acc / (1.0 - std::exp((1.0 - s) * std::log(2.0)));
}

} // namespace detail

/// Riemann zeta for any complex s != 1.
inline cplx riemann_zeta(cplx s)
{
    if (s == cplx(1.0, 0.0)) throw domain_error("riemann_zeta: pole at s = 1");
    if (s.real() >= 0.5) {
        if (s.real() > 60.0) return 1.0 + std::exp(-s * std::log(2.0)) + std::exp(-s * std::log(3.0));
        return detail::zeta_borwein(s);
    }
    if (s == cplx(0.0, 0.0)) return -0.5;
    const cplx half = 0.5 * s;
    if (s.imag() == 0.0 && half.real() < 0.0 && half.real() == std::floor(half.real())) return 0.0; // trivial zeros
    // zeta(s) = 2^s pi^{s-1} sin(pi s/2) Gamma(1-s) zeta(1-s)
    const cplx logf = s * std::log(2.0) + (s - 1.0) * std::log(pi) + detail::log_sin_pi(half) + lgamma(1.0 - s);
    return std::exp(logf) * detail::zeta_borwein(1.0 - s);
}

inline double riemann_zeta(double s) { return riemann_zeta(cplx(s, 0.0)).real(); }

/// Hurwitz zeta(s, a) = sum_{k>=0} (k+a)^{-s} for a > 0, s != 1, by
/// Euler-Maclaurin after shifting a past |s|.
inline cplx hurwitz_zeta(cplx s, double a)
{
    if (!(a > 0.0)) throw domain_error("hurwitz_zeta: a must be > 0");
    if (s == cplx(1.0, 0.0)) throw domain_error("hurwitz_zeta: pole at s = 1");
    const int n = std::max(0, int(std::ceil(std::abs(s) + 20.0 - a)));
    cplx head = 0.0;
    for (int k = 0; k < n; ++k) head += std::exp(-s * std::log(a + k));
    const double x = a + n;
    const cplx xs = std::exp(-s * std::log(x));
    cplx tail = xs * x / (s - 1.0) + 0.5 * xs;
    // + sum_j B_{2j}/(2j)! (s)_{2j-1} x^{-s-2j+1}
    cplx poch = s, xp = xs / x;
    double fact = 2.0;
    for (int j = 1; j < int(bernoulli_even.size()); ++j) {
        const cplx term = bernoulli_even[std::size_t(j)] / fact * poch * xp;
        tail += term;
        if (std::abs(term) < 1e-17 * std::abs(tail)) break;
        poch *= (s + double(2 * j - 1)) * (s + double(2 * j));
        xp /= x * x;
        fact *= double(2 * j + 1) * double(2 * j + 2);
    }
    return head + tail;
}

/// e^x E_1(x) for x > 0; O(1/x) for large x with no overflow.
inline double exp_e1(double x)
{
    if (!(x > 0.0)) throw domain_error("exp_e1: x must be > 0");
    if (x <= 1.0) {
        // E_1(x) = -gamma - log x - sum_{k>=1} (-x)^k/(k k!)
        double sum = 0.0, term = 1.0;
        for (int k = 1; k < 60; ++k) {
            term *= -x / k;
            sum += term / k;
            if (std::abs(term) < 1e-18) break;
        }
        return std::exp(x) * (-euler_gamma - std::log(x) - sum);
    }
    // Lentz on 1/(x+1- 1^2/(x+3- 2^2/(x+5- ...)))
    const double tiny = 1e-300;
    double b = x + 1.0, c = 1.0 / tiny, d = 1.0 / b, h = d;
    for (int i = 1; i < 10000; ++i) {
        const double an = -double(i) * double(i);
        b += 2.0;
        d = 1.0 / (an * d + b);
        c = b + an / c;
        const double del = c * d;
        h *= del;
        if (std::abs(del - 1.0) < 1e-16) return h;
    }
    throw convergence_error("exp_e1: continued fraction did not converge");
}

inline double expint_e1(double x) { return exp_e1(x) * std::exp(-x); }

} // namespace kosh
