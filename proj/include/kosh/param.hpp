#pragma once

#include <cmath>
#include <cstdio>
#include <complex>
#include <numbers>
#include <stdexcept>
#include <string>

namespace kosh {

using cplx = std::complex<double>;

inline constexpr double pi = std::numbers::pi;
inline constexpr double euler_gamma = std::numbers::egamma;

/// Raised when an argument lies outside the domain of a function (poles,
/// nonpositive parameters, malformed identifiers).
class domain_error : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// Raised when an iterative or adaptive procedure cannot reach the requested
/// tolerance within its budget.
class convergence_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// The deformation parameter p of the characteristic equation
/// p sin(pi l) + l cos(pi l) = 0, with its two limits as first-class values.
class KoshParam {
public:
    enum class Kind { finite, zero, infinity };

    /// Finite values above this threshold are indistinguishable from the
    /// p -> infinity limit in double precision and are stored as Infinity.
    static constexpr double infinity_threshold = 1e8;

    static KoshParam finite(double p)
    {
        if (!std::isfinite(p) || !(p > 0.0))
            throw domain_error("KoshParam: p must be finite and > 0, got " + std::to_string(p));
        if (p > infinity_threshold) return infinity();
        return KoshParam(Kind::finite, p);
    }
    static constexpr KoshParam zero() { return KoshParam(Kind::zero, 0.0); }
    static constexpr KoshParam infinity() { return KoshParam(Kind::infinity, 0.0); }

    constexpr Kind kind() const { return kind_; }
    constexpr bool is_finite() const { return kind_ == Kind::finite; }
    constexpr bool is_zero() const { return kind_ == Kind::zero; }
    constexpr bool is_infinity() const { return kind_ == Kind::infinity; }

    /// The numeric value of p; only meaningful for Finite.
    double value() const
    {
        if (!is_finite()) throw domain_error("KoshParam: value() requested for a limit parameter");
        return p_;
    }

    /// B_0^{(p)} = 1/(1 + 1/(pi p)); 0 at p -> 0 and 1 at p -> infinity.
    double b0() const
    {
        switch (kind_) {
        case Kind::zero: return 0.0;
        case Kind::infinity: return 1.0;
        default: return pi * p_ / (pi * p_ + 1.0);
        }
    }

    std::string to_string() const
    {
        switch (kind_) {
        case Kind::zero: return "zero";
        case Kind::infinity: return "inf";
        default: {
            char buf[64];
            std::snprintf(buf, sizeof buf, "%.17g", p_);
            return buf;
        }
        }
    }

    friend constexpr bool operator==(const KoshParam&, const KoshParam&) = default;

private:
    constexpr KoshParam(Kind k, double p) : kind_(k), p_(p) {}
    Kind kind_;
    double p_;
};

} // namespace kosh
