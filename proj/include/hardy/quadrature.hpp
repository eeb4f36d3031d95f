#pragma once

#include <algorithm>
#include <cmath>
#include <functional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "hardy/core.hpp"

// Double-exponential (tanh-sinh) quadrature on finite intervals, robust to algebraic
// endpoint singularities x^sigma with sigma > -1. Integrands receive the distances to
// both endpoints computed without cancellation, which is what makes weights like
// (1-r)^{-1-sp} evaluable at nodes within 1e-300 of the endpoint.

namespace hardy::quadrature {

/// Integrand on the open interval (a,b). The callable is f(x, dist_a, dist_b) where
/// dist_a = x-a and dist_b = b-x are exact; sigma_a / sigma_b declare the endpoint
/// behavior f ~ dist^sigma (they set the truncation depth).
struct Integrand1D {
    std::function<double(double, double, double)> f;
    double a = 0.0;
    double b = 1.0;
    double sigma_a = 0.0;
    double sigma_b = 0.0;

    Integrand1D() = default;
    Integrand1D(std::function<double(double, double, double)> fn, double lo, double hi,
                double sa = 0.0, double sb = 0.0)
        : f(std::move(fn)), a(lo), b(hi), sigma_a(sa), sigma_b(sb) {}

    /// Plain f(x) convenience for integrands that need no stable endpoint distances.
    static Integrand1D plain(std::function<double(double)> fn, double lo, double hi,
                             double sa = 0.0, double sb = 0.0) {
        return Integrand1D([g = std::move(fn)](double x, double, double) { return g(x); }, lo,
                           hi, sa, sb);
    }
};

namespace detail {

inline constexpr double d_eps = 2.2204460492503131e-16;

// Truncation point: the tail beyond the last node at endpoint distance eps contributes
// ~ eps^{1+sigma}/(1+sigma); require that below tol. Node distances are ~2 e^{-2u} with
// u = (pi/2) sinh(t), and 2u <= 700 keeps e^{-2u} above underflow.
inline double tmax_for_sigma(double sigma, double tol) {
    double need = std::log(10.0 / tol) / std::max(1.0 + sigma, 0.05);
    need = std::max(need, std::log(4e17));
    need = std::min(need, 350.0);
    return std::asinh(need * 2.0 / M_PI);
}

inline double truncation_residual(double sigma, double tmax, double half_length) {
    double u = 0.5 * M_PI * std::sinh(tmax);
    double log_eps = std::log(2.0 * half_length) - 2.0 * u;
    double t = std::exp((1.0 + sigma) * log_eps) / std::max(1.0 + sigma, 1e-3);
    return std::isfinite(t) ? t : 0.0;
}

}  // namespace detail

/// Tanh-sinh integration of f over (a,b). abs_err combines the level-difference
/// extrapolation with the endpoint truncation residual. Stops once
/// abs_err <= max(tol, tol|value|); otherwise returns the best estimate reached.
inline QuadResult integrate_1d(const Integrand1D& g, double tol, int max_level = 12) {
    if (!(tol > 0.0)) throw std::invalid_argument("integrate_1d: tol must be positive");
    if (!(g.a < g.b)) throw std::invalid_argument("integrate_1d: empty interval");
    if (!(g.sigma_a > -1.0) || !(g.sigma_b > -1.0))
        throw std::invalid_argument("integrate_1d: endpoint exponent <= -1 (not integrable)");

    const double half = 0.5 * (g.b - g.a);
    const double tmax_pos = detail::tmax_for_sigma(g.sigma_b, tol);  // t>0: x near b
    const double tmax_neg = detail::tmax_for_sigma(g.sigma_a, tol);
    const double trunc = detail::truncation_residual(g.sigma_b, tmax_pos, half) +
                         detail::truncation_residual(g.sigma_a, tmax_neg, half);
    long n_evals = 0;

    auto eval_node = [&](double t) -> double {
        const double u = 0.5 * M_PI * std::sinh(t);
        const double au = std::abs(u);
        const double e2u = std::exp(-2.0 * au);
        const double w = 2.0 * M_PI * std::cosh(t) * e2u / ((1.0 + e2u) * (1.0 + e2u));
        if (w == 0.0) return 0.0;
        const double dnear = half * (2.0 * e2u / (1.0 + e2u));
        const double dfar = half * (2.0 / (1.0 + e2u));
        double x, da, db;
        if (t >= 0.0) {
            da = dfar; db = dnear; x = g.b - dnear;
        } else {
            da = dnear; db = dfar; x = g.a + dnear;
        }
        ++n_evals;
        const double v = w * g.f(x, da, db);
        return std::isfinite(v) ? v : 0.0;
    };

    const double tmax = std::max(tmax_pos, tmax_neg);
    double h = 1.0;
    double s = eval_node(0.0);
    for (int k = 1; k * h <= tmax; ++k) {
        if (k * h <= tmax_pos) s += eval_node(k * h);
        if (k * h <= tmax_neg) s += eval_node(-k * h);
    }
    double prev2 = 0.0, prev = half * h * s, current = prev;
    for (int level = 1; level <= max_level; ++level) {
        h *= 0.5;
        double s_new = 0.0;
        for (int k = 1; k * h <= tmax; k += 2) {
            if (k * h <= tmax_pos) s_new += eval_node(k * h);
            if (k * h <= tmax_neg) s_new += eval_node(-k * h);
        }
        current = 0.5 * prev + half * h * s_new;
        const double diff = std::abs(current - prev);
        const double d2 = std::abs(prev - prev2);
        // geometric-tail error estimate: if level differences contract by the ratio
        // diff/d2, the remaining error is ~ diff^2/(d2 - diff); conservative when the
        // contraction is slow, reduces to diff^2/d2 when it is fast
        double est = (d2 > diff) ? diff * diff / (d2 - diff) : diff;
        est = std::max(est, 4.0 * detail::d_eps * std::abs(current));
        if (level >= 3 && est <= tol * std::max(1.0, std::abs(current)))
            return {current, est + trunc, n_evals};
        prev2 = prev;
        prev = current;
    }
    return {current, std::abs(current - prev) + std::abs(prev - prev2) + trunc, n_evals};
}

/// Integrand on the square (a,b)^2 with an integrable singularity along the diagonal:
/// f(x, y, dxy) where dxy = |x-y| is exact near the diagonal. sigma_diag declares
/// f ~ dxy^sigma there; breaks lists interior lines where smoothness is lost
/// (profile joints), applied in both coordinates.
struct Integrand2D {
    std::function<double(double, double, double)> f;
    double a = 0.0;
    double b = 1.0;
    double sigma_diag = 0.0;
    std::vector<double> breaks{};
    double sigma_a = 0.0;  ///< edge behavior in either coordinate at a
    double sigma_b = 0.0;
};

struct QuadResult2D {
    QuadResult total;
    double lower_triangle = 0.0;  ///< y < x contribution
    double upper_triangle = 0.0;  ///< y > x contribution
};

namespace detail {

inline std::vector<double> panel_points(double a, double b, const std::vector<double>& breaks,
                                        double split_at = std::nan("")) {
    std::vector<double> pts{a, b};
    for (double t : breaks)
        if (t > a && t < b) pts.push_back(t);
    if (!std::isnan(split_at) && split_at > a && split_at < b) pts.push_back(split_at);
    std::sort(pts.begin(), pts.end());
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    return pts;
}

// Inner integral over one triangle half: y over (a,x) when lower, (x,b) when upper.
inline QuadResult inner_half(const Integrand2D& g, double x, bool lower, double inner_tol,
                             int max_level) {
    const double lo_end = lower ? g.a : x;
    const double hi_end = lower ? x : g.b;
    QuadResult out{0.0, 0.0, 0};
    if (!(lo_end < hi_end)) return out;
    auto pts = panel_points(lo_end, hi_end, g.breaks);
    for (std::size_t i = 0; i + 1 < pts.size(); ++i) {
        const bool ends_at_x = lower && (i + 2 == pts.size());
        const bool starts_at_x = !lower && (i == 0);
        Integrand1D seg(
            [&g, x, ends_at_x, starts_at_x](double y, double da, double db) {
                const double dxy = ends_at_x ? db : (starts_at_x ? da : std::abs(x - y));
                if (dxy <= 0.0) return 0.0;
                return g.f(x, y, dxy);
            },
            pts[i], pts[i + 1],
            starts_at_x ? g.sigma_diag : (pts[i] == g.a ? g.sigma_a : 0.0),
            ends_at_x ? g.sigma_diag : (pts[i + 1] == g.b ? g.sigma_b : 0.0));
        QuadResult r = integrate_1d(seg, inner_tol, max_level);
        out.value += r.value;
        out.abs_err += r.abs_err;
        out.n_evals += r.n_evals;
    }
    return out;
}

}  // namespace detail

/// Iterated tanh-sinh over the square, split along the diagonal; the two triangles are
/// integrated independently (the singular edge is an endpoint of every inner panel).
inline QuadResult2D integrate_2d_split(const Integrand2D& g, double tol, int max_level = 10) {
    if (!(tol > 0.0)) throw std::invalid_argument("integrate_2d: tol must be positive");
    if (!(g.a < g.b)) throw std::invalid_argument("integrate_2d: empty square");
    if (!(g.sigma_diag > -1.0))
        throw std::invalid_argument("integrate_2d: diagonal exponent <= -1");

    const double inner_tol = tol * 0.1;
    const int inner_level = std::max(6, max_level - 1);
    auto pts = detail::panel_points(g.a, g.b, g.breaks);

    double tri[2] = {0.0, 0.0};
    double err = 0.0;
    long n_evals = 0;
    for (int side = 0; side < 2; ++side) {
        const bool lower = (side == 0);
        for (std::size_t i = 0; i + 1 < pts.size(); ++i) {
            double inner_err_peak = 0.0;
            Integrand1D outer(
                [&](double x, double, double) {
                    QuadResult r = detail::inner_half(g, x, lower, inner_tol, inner_level);
                    n_evals += r.n_evals;
                    inner_err_peak = std::max(inner_err_peak, r.abs_err);
                    return r.value;
                },
                pts[i], pts[i + 1], pts[i] == g.a ? g.sigma_a : 0.0,
                pts[i + 1] == g.b ? g.sigma_b : 0.0);
            QuadResult part = integrate_1d(outer, tol, max_level);
            tri[side] += part.value;
            err += part.abs_err + inner_err_peak * (pts[i + 1] - pts[i]);
        }
    }
    return {{tri[0] + tri[1], err, n_evals}, tri[0], tri[1]};
}

inline QuadResult integrate_2d(const Integrand2D& g, double tol, int max_level = 10) {
    return integrate_2d_split(g, tol, max_level).total;
}

}  // namespace hardy::quadrature
