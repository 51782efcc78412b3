#pragma once

// The kernels sigma(z) = (p+z)/(p-z), sigma_p(z) = sum_j w_j e^{-lambda_j z}
// and K(t) = 1/(sigma(t) e^{2 pi t} - 1).

#include <cmath>
#include <complex>
#include <memory>

#include "classical.hpp"
#include "param.hpp"
#include "roots.hpp"
#include "taylor.hpp"

namespace kosh {

namespace detail {

inline cplx expm1(cplx w)
{
    if (std::abs(w) < 0.5) {
        const cplx h = 0.5 * w;
        return 2.0 * std::exp(h) * std::sinh(h);
    }
    return std::exp(w) - 1.0;
}
inline double expm1(double w) { return std::expm1(w); }

} // namespace detail

/// (p+z)/(p-z); 1 at p = inf; -1 at p = 0.
inline cplx sigma_ratio(KoshParam p, cplx z)
{
    if (p.is_infinity()) return 1.0;
    if (p.is_zero()) return -1.0;
    const double pv = p.value();
    if (z == cplx(pv, 0.0)) throw domain_error("sigma_ratio: pole at z = p");
    return (pv + z) / (pv - z);
}

/// Evaluator for sigma_p bound to one p; holds the shared eigen table.
class SigmaKernel {
public:
    static constexpr long em_terms = 16;
    static constexpr std::size_t em_order = 24;

    explicit SigmaKernel(KoshParam p, double trunc_eps = 1e-17) : p_(p), eps_(trunc_eps)
    {
        if (!(trunc_eps > 0.0)) throw domain_error("SigmaKernel: trunc_eps must be > 0");
        if (p.is_finite()) {
            table_ = shared_table(p, 256);
            jet_ = &shared_jet(p, em_terms, em_order);
        }
    }

    KoshParam param() const { return p_; }

    /// sigma_p(z), Re z > 0.
    cplx operator()(cplx z) const { return eval<cplx>(z, false); }
    double operator()(double x) const { return eval<double>(x, false); }

    /// sigma_p(x) - 1/x, finite as x -> 0.
    double regular(double x) const { return eval<double>(x, true); }
    cplx regular(cplx z) const { return eval<cplx>(z, true); }

    /// Number of explicit terms the direct sum would use at Re z = x.
    long direct_terms(double x) const
    {
        return long(std::ceil(std::log(1.0 / eps_) / x)) + 10;
    }

private:
    template <class T>
    T eval(T z, bool reg) const
    {
        using std::abs;
        const double x = std::real(cplx(z));
        if (!(x > 0.0)) throw domain_error("sigma_p: Re z must be > 0");
        if (p_.is_infinity()) {
            if (reg && abs(z) < 0.5) return limit_reg_inf(z);
            const T v = T(1.0) / detail::expm1(z);
            return reg ? v - T(1.0) / z : v;
        }
        if (p_.is_zero()) {
            if (reg && abs(z) < 0.5) return limit_reg_inf(z * 0.5) - limit_reg_inf(z);
            const T v = T(0.5) / sinh(z * 0.5);
            return reg ? v - T(1.0) / z : v;
        }
        if (x < 1.0 && abs(z) < 1.5) return em<T>(z, reg);
        const long n = direct_terms(x);
        auto tab = table_;
        if (std::size_t(n) > tab->size()) tab = shared_table(p_, std::size_t(n));
        T sum = 0.0;
        const double q = std::exp(-x);
        for (long j = 0; j < long(tab->size()); ++j) {
            const T term = tab->weights[std::size_t(j)] * std::exp(-tab->lambdas[std::size_t(j)] * z);
            sum += term;
            // remaining terms are bounded by e^{-lambda_{j+1} x}/(1-e^{-x}) <= |term| q^{1/2}/(1-q)
            if (abs(term) * std::sqrt(q) / (1.0 - q) <= eps_ * abs(sum)) break;
        }
        return reg ? sum - T(1.0) / z : sum;
    }

    template <class T>
    static T limit_reg_inf(T z)
    {
        // 1/(e^z-1) - 1/z = sum_{k>=1} B_{2k} z^{2k-1}/(2k)! - 1/2
        T r = -0.5, zp = z;
        double f = 2.0;
        for (int k = 1; k <= 12; ++k) {
            r += bernoulli_even[std::size_t(k)] / f * zp;
            zp *= z * z;
            f *= double(2 * k + 1) * double(2 * k + 2);
        }
        return r;
    }

    static cplx sinh(cplx z) { return std::sinh(z); }
    static double sinh(double z) { return std::sinh(z); }

    // Euler-Maclaurin over u with lambda(u), w(u) from the jet at u = N.
    template <class T>
    T em(T z, bool reg) const
    {
        const long N = em_terms;
        T head = 0.0;
        for (long j = 0; j < N - 1; ++j)
            head += table_->weights[std::size_t(j)] * std::exp(-table_->lambdas[std::size_t(j)] * z);
        const double lamN = jet_->lambda[0];
        Taylor<T> E = exp(jet_->lambda.template cast<T>() * (-z));
        Taylor<T> G = jet_->weight.template cast<T>() * E;
        // int_N^inf g du = e^{-lambda_N z}/z
        T integral = reg ? detail::expm1(-lamN * z) / z : std::exp(-lamN * z) / z;
        T corr = 0.5 * G[0];
        for (std::size_t k = 1; 2 * k - 1 <= em_order; ++k)
            corr -= bernoulli_even[k] / double(2 * k) * G[2 * k - 1];
        return head + integral + corr;
    }

    KoshParam p_;
    double eps_;
    std::shared_ptr<const EigenTable> table_;
    const LambdaJet* jet_ = nullptr;
};

inline cplx sigma_p(KoshParam p, cplx z, double eps = 1e-17) { return SigmaKernel(p, eps)(z); }
inline double sigma_p(KoshParam p, double x, double eps = 1e-17) { return SigmaKernel(p, eps)(x); }

/// sigma_p(x) - 1/x.
inline double sigma_p_regular(KoshParam p, double x, double eps = 1e-17) { return SigmaKernel(p, eps).regular(x); }

/// K(t) = 1/(sigma(t) e^{2 pi t} - 1) for t > 0, evaluated in the form
/// (p-t)/(p E + t(E+2)), E = e^{2 pi t} - 1, which has no cancellation.
inline double inv_sigma_exp(KoshParam p, double t)
{
    if (!(t > 0.0)) throw domain_error("inv_sigma_exp: t must be > 0");
    const double x = 2.0 * pi * t;
    if (p.is_infinity()) return 1.0 / std::expm1(x);
    if (p.is_zero()) return -1.0 / (std::exp(x) + 1.0);
    const double pv = p.value();
    if (x > 600.0) {
        const double q = (pv - t) / (pv + t) * std::exp(-x);
        return q / (1.0 - q);
    }
    const double E = std::expm1(x);
    return (pv - t) / (pv * E + t * (E + 2.0));
}

/// K(w) for complex w off the poles.
inline cplx inv_sigma_exp(KoshParam p, cplx w)
{
    const cplx x = 2.0 * pi * w;
    if (p.is_infinity()) return 1.0 / detail::expm1(x);
    if (p.is_zero()) return -1.0 / (std::exp(x) + 1.0);
    const double pv = p.value();
    if (x.real() > 600.0) {
        const cplx q = (pv - w) / (pv + w) * std::exp(-x);
        return q / (1.0 - q);
    }
    const cplx E = detail::expm1(x);
    return (pv - w) / (pv * E + w * (E + 2.0));
}

/// K(t) - B_0^{(p)}/(2 pi t), finite at t = 0.
inline double inv_sigma_exp_regular(KoshParam p, double t)
{
    if (!(t > 0.0)) throw domain_error("inv_sigma_exp_regular: t must be > 0");
    const double x = 2.0 * pi * t;
    if (p.is_infinity()) return bernoulli_kernel(x);
    if (p.is_zero()) return -1.0 / (std::exp(x) + 1.0);
    if (x >= 1.0) return inv_sigma_exp(p, t) - p.b0() / x;
    const double pv = p.value();
    const double E = std::expm1(x), R = expm1_minus_x(x);
    const double num = -2.0 * t * t * (2.0 * pi * pv + 1.0) - pv * (pv + t) * R;
    return num / ((pv * E + t * (E + 2.0)) * 2.0 * t * (pi * pv + 1.0));
}

} // namespace kosh
