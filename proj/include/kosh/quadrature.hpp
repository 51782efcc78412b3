#pragma once

// Globally adaptive Gauss-Kronrod (10/21) quadrature on finite panels, with
// a rational map for the tail of semi-infinite integrals.

#include <algorithm>
#include <cmath>
#include <complex>
#include <limits>
#include <queue>
#include <string>
#include <vector>

#include "param.hpp"

namespace kosh {

/// Truncation horizon policy for semi-infinite integrals.
struct Horizon {
    enum class Kind { fixed, automatic };
    Kind kind = Kind::automatic;
    double value = 1e-17;

    /// Integrate on [0, T] only.
    static Horizon fixed(double T) { return {Kind::fixed, T}; }
    /// Choose T where |f| T first drops below eps, then also add the mapped
    /// remainder [T, inf) so that nothing is discarded.
    static Horizon automatic(double eps) { return {Kind::automatic, eps}; }
};

struct QuadSpec {
    double abs_tol = 1e-13;
    double rel_tol = 1e-12;
    int max_subdivisions = 4000;
    Horizon horizon = Horizon::automatic(1e-17);
    std::vector<double> split_points;

    QuadSpec& tol(double abs, double rel)
    {
        abs_tol = abs;
        rel_tol = rel;
        return *this;
    }
    QuadSpec& splits(std::vector<double> pts)
    {
        split_points = std::move(pts);
        return *this;
    }
    QuadSpec& with_horizon(Horizon h)
    {
        horizon = h;
        return *this;
    }
};

struct QuadResult {
    cplx value = 0.0;
    double abs_err_estimate = 0.0;
    long nodes_used = 0;
    double truncation_T = 0.0;

    double real() const { return value.real(); }
};

namespace detail {

// 21-point Kronrod abscissae on [0,1]; odd indices are the 10-point Gauss nodes.
inline constexpr double gk_x[11] = {
    0.0,
    0.148874338981631211,
    0.294392862701460198,
    0.433395394129247191,
    0.562757134668604683,
    0.679409568299024406,
    0.780817726586416897,
    0.865063366688984511,
    0.930157491355708226,
    0.973906528517171720,
    0.995657163025808081,
};
inline constexpr double gk_wk[11] = {
    0.149445554002916906,
    0.147739104901338491,
    0.142775938577060081,
    0.134709217311473326,
    0.123491976262065851,
    0.109387158802297642,
    0.0931254545836976055,
    0.0750396748109199528,
    0.0547558965743519960,
    0.0325581623079647275,
    0.0116946388673718743,
};
inline constexpr double gk_wg[5] = {
    0.295524224714752870,
    0.269266719309996355,
    0.219086362515982044,
    0.149451349150580593,
    0.0666713443086881376,
};

struct Panel {
    double a, b;
    cplx value;
    double err;
    double floor; // roundoff level; refining below it cannot help
    bool operator<(const Panel& o) const { return err < o.err; }
};

template <class F>
cplx sample(F& f, double x)
{
    const cplx v = cplx(f(x));
    if (!std::isfinite(v.real()) || !std::isfinite(v.imag()))
        throw convergence_error("quadrature: non-finite integrand sample at x = " + std::to_string(x));
    return v;
}

template <class F>
Panel gk21(F& f, double a, double b)
{
    const double c = 0.5 * (a + b), h = 0.5 * (b - a);
    const cplx fc = sample(f, c);
    cplx k = gk_wk[0] * fc, g = 0.0;
    double resabs = gk_wk[0] * std::abs(fc);
    cplx fv[21];
    fv[0] = fc;
    for (int i = 1; i <= 10; ++i) {
        const cplx f1 = sample(f, c - h * gk_x[i]);
        const cplx f2 = sample(f, c + h * gk_x[i]);
        fv[2 * i - 1] = f1;
        fv[2 * i] = f2;
        k += gk_wk[i] * (f1 + f2);
        resabs += gk_wk[i] * (std::abs(f1) + std::abs(f2));
        if (i % 2 == 1) g += gk_wg[i / 2] * (f1 + f2);
    }
    const cplx mean = 0.5 * k;
    double resasc = gk_wk[0] * std::abs(fc - mean);
    for (int i = 1; i <= 10; ++i)
        resasc += gk_wk[i] * (std::abs(fv[2 * i - 1] - mean) + std::abs(fv[2 * i] - mean));
    resasc *= std::abs(h);
    resabs *= std::abs(h);
    double err = std::abs((k - g) * h);
    if (resasc != 0.0 && err != 0.0) err = resasc * std::min(1.0, std::pow(200.0 * err / resasc, 1.5));
    const double eps = std::numeric_limits<double>::epsilon();
    if (resabs > std::numeric_limits<double>::min() / (50.0 * eps)) err = std::max(50.0 * eps * resabs, err);
    return {a, b, k * h, err, 50.0 * eps * resabs};
}

template <class F>
QuadResult adapt(F& f, const std::vector<double>& pts, const QuadSpec& spec)
{
    if (!(spec.abs_tol > 0.0) || !(spec.rel_tol > 0.0) || spec.max_subdivisions < 1)
        throw domain_error("QuadSpec: tolerances must be > 0 and max_subdivisions >= 1");
    std::priority_queue<Panel> heap;
    std::vector<Panel> done;
    cplx total = 0.0;
    double err = 0.0;
    long nodes = 0;
    for (std::size_t i = 0; i + 1 < pts.size(); ++i) {
        if (!(pts[i + 1] > pts[i])) continue;
        Panel p = gk21(f, pts[i], pts[i + 1]);
        nodes += 21;
        total += p.value;
        err += p.err;
        heap.push(p);
    }
    int splits = 0;
    while (!heap.empty() && err > std::max(spec.abs_tol, spec.rel_tol * std::abs(total))) {
        Panel w = heap.top();
        heap.pop();
        const double m = 0.5 * (w.a + w.b);
        if (!(m > w.a && m < w.b) || (w.b - w.a) < 1e-15 * std::max(1.0, std::abs(m)) || w.err <= 1.01 * w.floor) {
            done.push_back(w); // cannot refine further; keep its estimate
            continue;
        }
        if (++splits > spec.max_subdivisions)
            throw convergence_error("quadrature: subdivision budget exhausted (err " + std::to_string(err) + ")");
        Panel l = gk21(f, w.a, m), r = gk21(f, m, w.b);
        nodes += 42;
        total += l.value + r.value - w.value;
        err += l.err + r.err - w.err;
        heap.push(l);
        heap.push(r);
    }
    // Re-sum to shed accumulated update drift.
    total = 0.0;
    err = 0.0;
    for (; !heap.empty(); heap.pop()) {
        total += heap.top().value;
        err += heap.top().err;
    }
    for (const auto& p : done) {
        total += p.value;
        err += p.err;
    }
    return {total, err, nodes, 0.0};
}

} // namespace detail

/// Integral of f over [a, b]; interior split points from spec are honoured.
template <class F>
QuadResult integrate(F f, double a, double b, const QuadSpec& spec = {})
{
    std::vector<double> pts{a};
    for (double s : spec.split_points)
        if (s > a && s < b) pts.push_back(s);
    pts.push_back(b);
    std::sort(pts.begin(), pts.end());
    QuadResult r = detail::adapt(f, pts, spec);
    r.truncation_T = b;
    return r;
}

/// Integral of f over (0, inf). f is never sampled at 0 or at split points.
template <class F>
QuadResult integrate_semi_infinite(F f, const QuadSpec& spec = {})
{
    std::vector<double> pts{0.0};
    for (double s : spec.split_points)
        if (s > 0.0) pts.push_back(s);
    std::sort(pts.begin(), pts.end());
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());

    double T;
    long probes = 0;
    if (spec.horizon.kind == Horizon::Kind::fixed) {
        T = spec.horizon.value;
    } else {
        T = 1.0;
        const double eps = spec.horizon.value;
        for (int i = 0; i < 60; ++i, T *= 1.5) {
            ++probes;
            if (std::abs(detail::sample(f, T)) * T < eps && std::abs(detail::sample(f, 1.5 * T)) * T < eps) break;
        }
    }
    std::vector<double> fin;
    for (double s : pts)
        if (s < T) fin.push_back(s);
    fin.push_back(T);
    QuadResult r = detail::adapt(f, fin, spec);
    r.nodes_used += 2 * probes;
    r.truncation_T = T;
    if (spec.horizon.kind == Horizon::Kind::automatic) {
        // x = T + u/(1-u), u in (0,1)
        auto g = [&](double u) {
            const double v = 1.0 - u;
            const double x = T + u / v;
            if (!std::isfinite(x)) return cplx(0.0);
            return cplx(f(x)) / (v * v);
        };
        QuadSpec ts = spec;
        ts.abs_tol = std::max(spec.abs_tol * 0.1, 1e-300);
        QuadResult tail = detail::adapt(g, {0.0, 1.0}, ts);
        r.value += tail.value;
        r.abs_err_estimate += tail.abs_err_estimate;
        r.nodes_used += tail.nodes_used;
    }
    return r;
}

/// Integral over y in (0, inf) of a parametrised vertical-line integrand
/// g(y) = h(alpha -+ i y) (dz/dy); identical machinery with complex output.
template <class G>
QuadResult integrate_vertical_line(G g, const QuadSpec& spec = {})
{
    return integrate_semi_infinite(std::move(g), spec);
}

} // namespace kosh
