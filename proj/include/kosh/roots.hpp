#pragma once

// Positive roots of p sin(pi l) + l cos(pi l) = 0 and their weights.

#include <algorithm>
#include <cmath>
#include <limits>
#include <cstddef>
#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <tuple>
#include <vector>

#include "param.hpp"
#include "taylor.hpp"

namespace kosh {

/// f(l) = p sin(pi l) + l cos(pi l).
inline double characteristic(double p, double lambda)
{
    return p * std::sin(pi * lambda) + lambda * std::cos(pi * lambda);
}

namespace detail {

// With l = j - 1/2 + d, f(l) = (-1)^{j+1} F(d) and F(d) = p cos(pi d) - l sin(pi d)
// falls strictly from p at d = 0 to -j at d = 1/2.
inline double reduced_char(double p, double j, double d)
{
    return p * std::cos(pi * d) - (j - 0.5 + d) * std::sin(pi * d);
}

inline double reduced_char_deriv(double p, double j, double d)
{
    const double s = std::sin(pi * d), c = std::cos(pi * d);
    return -pi * p * s - s - pi * (j - 0.5 + d) * c;
}

} // namespace detail

inline constexpr long large_j_threshold = 10000;

/// lambda_j, the root in (j - 1/2, j). tol bounds the final Newton step.
inline double solve_eigenvalue(KoshParam p, long j, double tol = 1e-15)
{
    if (j < 1) throw domain_error("solve_eigenvalue: j must be >= 1");
    if (!(tol > 0.0)) throw domain_error("solve_eigenvalue: tol must be > 0");
    if (p.is_zero()) return double(j) - 0.5;
    if (p.is_infinity()) return double(j);
    const double pv = p.value();
    const double jd = double(j);
    const double eps = 1e-14 * jd;
    double lo = 0.0, hi = 0.5, d;
    if (j > large_j_threshold) {
        d = 0.5 - std::atan(jd / pv) / pi;
    } else {
        while (hi - lo > 1e-3) {
            const double mid = 0.5 * (lo + hi);
            if (detail::reduced_char(pv, jd, mid) > 0.0) lo = mid;
            else hi = mid;
        }
        d = 0.5 * (lo + hi);
    }
    const double dmin = std::min(eps, 0.25), dmax = 0.5 - std::min(eps, 0.25);
    for (int it = 0; it < 100; ++it) {
        const double F = detail::reduced_char(pv, jd, d);
        if (F == 0.0) return jd - 0.5 + d;
        if (F > 0.0) lo = std::max(lo, d);
        else hi = std::min(hi, d);
        const double step = F / detail::reduced_char_deriv(pv, jd, d);
        double next = d - step;
        if (!(next > lo && next < hi)) next = 0.5 * (lo + hi); // overshoot: bisect
        next = std::clamp(next, dmin, dmax);
        const double moved = std::abs(next - d);
        d = next;
        if (moved <= tol * std::max(1.0, d) || moved <= 4.0 * std::numeric_limits<double>::epsilon() * (jd + d))
            return jd - 0.5 + d;
    }
    throw convergence_error("solve_eigenvalue: no convergence at j = " + std::to_string(j));
}

/// (p^2 + l^2)/(p(p + 1/pi) + l^2); 1 in both limits.
inline double weight(KoshParam p, double lambda)
{
    if (!p.is_finite()) return 1.0;
    const double pv = p.value();
    return (pv * pv + lambda * lambda) / (pv * (pv + 1.0 / pi) + lambda * lambda);
}

struct EigenTable {
    KoshParam p = KoshParam::infinity();
    std::vector<double> lambdas;
    std::vector<double> weights;
    std::vector<double> residuals; // |f(lambda_j)|

    std::size_t size() const { return lambdas.size(); }
};

/// First `count` roots; checks the bracketing certificate before refinement
/// and all table invariants afterwards.
inline EigenTable build_table(KoshParam p, std::size_t count, double tol = 1e-15)
{
    if (count < 1) throw domain_error("build_table: count must be >= 1");
    EigenTable t;
    t.p = p;
    t.lambdas.reserve(count);
    t.weights.reserve(count);
    t.residuals.reserve(count);
    for (std::size_t i = 0; i < count; ++i) {
        const long j = long(i) + 1;
        double lam;
        try {
            if (p.is_finite()) {
                const double pv = p.value();
                if (!(characteristic(pv, j - 0.5) * characteristic(pv, double(j)) < 0.0))
                    throw convergence_error("missing sign change");
            }
            lam = solve_eigenvalue(p, j, tol);
        } catch (const std::exception& e) {
            throw convergence_error("build_table: root " + std::to_string(j) + ": " + e.what());
        }
        t.lambdas.push_back(lam);
        t.weights.push_back(weight(p, lam));
        t.residuals.push_back(p.is_finite() ? std::abs(characteristic(p.value(), lam)) : 0.0);
    }
    return t;
}

/// Process-wide immutable tables, grown on demand. The returned pointer stays
/// valid even if a larger table later replaces it in the cache.
inline std::shared_ptr<const EigenTable> shared_table(KoshParam p, std::size_t min_count)
{
    static std::mutex mu;
    static std::map<std::pair<int, double>, std::shared_ptr<const EigenTable>> cache;
    const auto key = std::make_pair(int(p.kind()), p.is_finite() ? p.value() : 0.0);
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(key);
    if (it != cache.end() && it->second->size() >= min_count) return it->second;
    std::size_t n = std::max<std::size_t>(min_count, 256);
    if (it != cache.end()) n = std::max(n, 2 * it->second->size());
    auto t = std::make_shared<const EigenTable>(build_table(p, n));
    cache[key] = t;
    return t;
}

/// Taylor jets of lambda(u) and w(lambda(u)) at u = N, where u(l) = l + 1/2 -
/// atan(p/l)/pi interpolates u(lambda_j) = j and dl/du = w(l).
struct LambdaJet {
    Taylor<double> lambda;
    Taylor<double> weight;
};

inline LambdaJet lambda_jet(KoshParam p, long N, std::size_t order)
{
    if (!p.is_finite()) {
        const double l0 = p.is_zero() ? N - 0.5 : double(N);
        return {Taylor<double>::variable(order, l0), Taylor<double>(order, 1.0)};
    }
    const double pv = p.value(), c = pv * pv + pv / pi;
    Taylor<double> L(order, solve_eigenvalue(p, N));
    Taylor<double> W(order);
    for (std::size_t k = 0; k <= order; ++k) {
        // w = 1 - (p/pi)/(c + L^2), exact through degree k once L is exact through k
        Taylor<double> D = L * L + c;
        W = reciprocal(D) * (-pv / pi) + 1.0;
        if (k < order) L[k + 1] = W[k] / double(k + 1);
    }
    return {L, W};
}

/// Cached lambda_jet.
inline const LambdaJet& shared_jet(KoshParam p, long N, std::size_t order)
{
    static std::mutex mu;
    static std::map<std::tuple<int, double, long, std::size_t>, std::unique_ptr<LambdaJet>> cache;
    const auto key = std::make_tuple(int(p.kind()), p.is_finite() ? p.value() : 0.0, N, order);
    std::lock_guard<std::mutex> lock(mu);
    auto& slot = cache[key];
    if (!slot) slot = std::make_unique<LambdaJet>(lambda_jet(p, N, order));
    return *slot;
}

} // namespace kosh
