#pragma once

// Reference computations that share no code with the library's algorithms:
// bisection roots, brute-force eigen sums, composite Simpson.

#include <cmath>
#include <complex>
#include <functional>
#include <numbers>
#include <vector>

namespace oracle {

using cplx = std::complex<double>;
inline constexpr double pi = std::numbers::pi;

/// Root of p sin(pi l) + l cos(pi l) in (j - 1/2, j) by plain bisection.
inline double eigenvalue(double p, long j)
{
    auto f = [p](double l) { return p * std::sin(pi * l) + l * std::cos(pi * l); };
    double a = j - 0.5, b = double(j);
    double fa = f(a);
    for (int it = 0; it < 200 && b - a > 0.0; ++it) {
        const double m = 0.5 * (a + b);
        if (m == a || m == b) break;
        const double fm = f(m);
        if ((fm < 0) == (fa < 0)) {
            a = m;
            fa = fm;
        } else {
            b = m;
        }
    }
    return 0.5 * (a + b);
}

inline std::vector<double> eigenvalues(double p, long n)
{
    std::vector<double> v;
    for (long j = 1; j <= n; ++j) v.push_back(eigenvalue(p, j));
    return v;
}

inline double weight(double p, double l) { return (p * p + l * l) / (p * (p + 1.0 / pi) + l * l); }

/// sum_j w_j e^{-lambda_j z}, truncated once terms fall below 1e-18.
inline cplx sigma_sum(double p, cplx z)
{
    cplx s = 0.0;
    for (long j = 1;; ++j) {
        const double l = eigenvalue(p, j);
        const cplx t = weight(p, l) * std::exp(-l * z);
        s += t;
        if (std::abs(t) < 1e-18 * std::max(1.0, std::abs(s)) && j > 5) break;
    }
    return s;
}

/// K(t) = 1/(sigma(t) e^{2 pi t} - 1) as the geometric series sum_n sigma(t)^{-n} e^{-2 pi n t}.
inline double k_geometric(double p, double t)
{
    const double q = (p - t) / (p + t) * std::exp(-2.0 * pi * t);
    double s = 0.0, qn = 1.0;
    for (int n = 1; n < 100000; ++n) {
        qn *= q;
        s += qn;
        if (std::abs(qn) < 1e-19) break;
    }
    return s;
}

inline double simpson(const std::function<double(double)>& f, double a, double b, long n)
{
    if (n % 2) ++n;
    const double h = (b - a) / double(n);
    double s = f(a) + f(b);
    for (long i = 1; i < n; ++i) s += f(a + h * double(i)) * (i % 2 ? 4.0 : 2.0);
    return s * h / 3.0;
}

} // namespace oracle
