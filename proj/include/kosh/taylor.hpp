#pragma once

// Truncated Taylor series f(x0 + h) = sum_k c_k h^k, used to obtain the
// high-order derivatives that Euler-Maclaurin tails need.

#include <cmath>
#include <complex>
#include <cstddef>
#include <stdexcept>
#include <vector>

namespace kosh {

template <class T>
class Taylor {
public:
    Taylor() = default;
    explicit Taylor(std::size_t order, T c0 = T{}) : c_(order + 1, T{}) { c_[0] = c0; }

    static Taylor variable(std::size_t order, T x0)
    {
        Taylor t(order, x0);
        if (order >= 1) t.c_[1] = T{1};
        return t;
    }

    std::size_t order() const { return c_.size() - 1; }
    T& operator[](std::size_t k) { return c_[k]; }
    const T& operator[](std::size_t k) const { return c_[k]; }
    const std::vector<T>& coeffs() const { return c_; }

    template <class U>
    Taylor<U> cast() const
    {
        Taylor<U> r(order());
        for (std::size_t k = 0; k < c_.size(); ++k) r[k] = U(c_[k]);
        return r;
    }

    Taylor& operator+=(const Taylor& o)
    {
        for (std::size_t k = 0; k < c_.size(); ++k) c_[k] += o.c_[k];
        return *this;
    }
    Taylor& operator-=(const Taylor& o)
    {
        for (std::size_t k = 0; k < c_.size(); ++k) c_[k] -= o.c_[k];
        return *this;
    }
    Taylor& operator+=(T a)
    {
        c_[0] += a;
        return *this;
    }
    Taylor& operator*=(T a)
    {
        for (auto& v : c_) v *= a;
        return *this;
    }

    friend Taylor operator+(Taylor a, const Taylor& b) { return a += b; }
    friend Taylor operator-(Taylor a, const Taylor& b) { return a -= b; }
    friend Taylor operator+(Taylor a, T b) { return a += b; }
    friend Taylor operator*(Taylor a, T b) { return a *= b; }
    friend Taylor operator*(T b, Taylor a) { return a *= b; }
    friend Taylor operator-(Taylor a)
    {
        for (auto& v : a.c_) v = -v;
        return a;
    }

    friend Taylor operator*(const Taylor& a, const Taylor& b)
    {
        const std::size_t n = a.c_.size();
        Taylor r(n - 1);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; i + j < n; ++j) r.c_[i + j] += a.c_[i] * b.c_[j];
        return r;
    }

    /// 1/a; requires a[0] != 0.
    friend Taylor reciprocal(const Taylor& a)
    {
        const std::size_t n = a.c_.size();
        if (a.c_[0] == T{}) throw std::domain_error("Taylor reciprocal: zero constant term");
        Taylor r(n - 1);
        r.c_[0] = T{1} / a.c_[0];
        for (std::size_t k = 1; k < n; ++k) {
            T acc{};
            for (std::size_t j = 1; j <= k; ++j) acc += a.c_[j] * r.c_[k - j];
            r.c_[k] = -acc * r.c_[0];
        }
        return r;
    }

    friend Taylor operator/(const Taylor& a, const Taylor& b) { return a * reciprocal(b); }

    /// exp(a) via e' = a' e.
    friend Taylor exp(const Taylor& a)
    {
        using std::exp;
        const std::size_t n = a.c_.size();
        Taylor r(n - 1);
        r.c_[0] = exp(a.c_[0]);
        for (std::size_t k = 1; k < n; ++k) {
            T acc{};
            for (std::size_t j = 1; j <= k; ++j) acc += T(double(j)) * a.c_[j] * r.c_[k - j];
            r.c_[k] = acc / T(double(k));
        }
        return r;
    }

    /// log(a) via (log a)' = a'/a; principal branch for the constant term.
    friend Taylor log(const Taylor& a)
    {
        using std::log;
        const std::size_t n = a.c_.size();
        if (a.c_[0] == T{}) throw std::domain_error("Taylor log: zero constant term");
        Taylor r(n - 1);
        r.c_[0] = log(a.c_[0]);
        for (std::size_t k = 1; k < n; ++k) {
            T acc = T(double(k)) * a.c_[k];
            for (std::size_t j = 1; j < k; ++j) acc -= T(double(j)) * r.c_[j] * a.c_[k - j];
            r.c_[k] = acc / (T(double(k)) * a.c_[0]);
        }
        return r;
    }

private:
    std::vector<T> c_;
};

} // namespace kosh
