#pragma once

#include <algorithm>
#include <cmath>
#include <string>

#include "hardy/core.hpp"
#include "hardy/quadrature.hpp"
#include "hardy/specfun.hpp"

// The sharp constants of the weighted fractional Hardy inequalities: the full-space
// constant (a weighted integral of the kernel profile Phi against |1-r^gamma|^p), the
// half-space constant with its Gamma prefactor, their p=2 closed forms, the s=0
// limits, and the remainder coefficient c_p. Every constant is computable by at least
// two independent routes for cross-validation.

namespace hardy::constants {

namespace logs {

/// log(e^u + e^v) without overflow.
inline double sum_exp2(double u, double v) {
    if (u == -std::numeric_limits<double>::infinity()) return v;
    if (v == -std::numeric_limits<double>::infinity()) return u;
    double m = std::max(u, v);
    return m + std::log1p(std::exp(-std::abs(u - v)));
}

/// log|1 - e^g| for any g (-inf at g = 0).
inline double abs_one_minus_exp(double g) {
    if (g == 0.0) return -std::numeric_limits<double>::infinity();
    if (g < 0.0) {
        if (g < -0.693) return std::log1p(-std::exp(g));
        return std::log(-std::expm1(g));
    }
    return g + abs_one_minus_exp(-g);
}

}  // namespace logs

struct PhiEval {
    int d = 1;
    double s = 0.0, p = 2.0;
    double r = 0.0;
    double value = 0.0;
};

namespace detail {

// log Phi_{d,s,p}(r) given 1-r exactly; safe arbitrarily close to r = 1 where the
// double value would overflow. For d >= 2 the hypergeometric is evaluated with the
// exact w = 1-r^2; beyond the double range only the leading w^{c-a-b} term survives.
inline double phi_log(int d, double s, double p, double r, double one_minus_r) {
    const double sp = s * p;
    if (d == 1) {
        const double w = one_minus_r;
        return -(1.0 + sp) * std::log(w) +
               std::log1p(std::pow(w / (2.0 - w), 1.0 + sp));
    }
    const double a = 0.5 * (d + sp), b = 0.5 * (2.0 + sp), c = 0.5 * d;
    const double z = r * r;
    const double wz = one_minus_r * (1.0 + r);
    const double log_sphere = std::log(sphere_area(d));
    const double mt = c - a - b;  // = -(1+sp)
    // would the direct value overflow?
    if (mt * std::log(wz) < 650.0) {
        QuadResult f = specfun::hyp2f1_w(a, b, c, z, wz);
        return log_sphere + std::log(f.value);
    }
    // leading coefficient of the w^{mt} branch
    const long mr = static_cast<long>(std::llround(-mt));
    double logc;
    if (std::abs(mt + mr) < 1e-12) {
        // integer case: Gamma(m)Gamma(c)/(Gamma(a)Gamma(b)) w^{-m}(1 + O(w))
        logc = std::log(specfun::gamma(static_cast<double>(mr)).value *
                        specfun::gamma(c).value * specfun::rec_gamma(a) *
                        specfun::rec_gamma(b));
    } else {
        logc = std::log(specfun::gamma(c).value * specfun::gamma(-mt).value *
                        specfun::rec_gamma(a) * specfun::rec_gamma(b));
    }
    return log_sphere + logc + mt * std::log(wz);
}

inline double lambda_ratio(double d, double b, double s) {
    return specfun::gamma(0.5 * (b + 2.0 * s)).value * specfun::gamma(0.5 * (d - b)).value *
           specfun::rec_gamma(0.5 * (d - b - 2.0 * s)) * specfun::rec_gamma(0.5 * b);
}

/// z cot(cz) with its removable singularity at z = 0 (-> 1/c) expanded in series.
inline double t_cot(double z, double c) {
    const double u = c * z;
    if (std::abs(u) < 1e-4) return 1.0 / c - c * z * z / 3.0 - c * c * c * z * z * z * z / 45.0;
    return z * std::cos(u) / std::sin(u);
}

inline void check_quad(const QuadResult& q, const char* what) {
    if (!q.within(tol::quad_accept))
        throw quadrature_error(std::string(what) + ": quadrature tolerance not met (abs_err " +
                               std::to_string(q.abs_err) + ")");
}

}  // namespace detail

/// Phi_{d,s,p}(r): the angular kernel profile. For d = 1 the two-term closed form;
/// for d >= 2 the Gauss-hypergeometric form.
inline PhiEval phi(int d, double s, double p, double r) {
    if (!(r >= 0.0 && r < 1.0)) throw std::invalid_argument("phi: r outside [0,1)");
    if (d < 1) throw std::invalid_argument("phi: d < 1");
    const double sp = s * p;
    double v;
    if (d == 1) {
        v = std::pow(1.0 - r, -1.0 - sp) + std::pow(1.0 + r, -1.0 - sp);
    } else {
        // 1 - r^2 formed as (1-r)(1+r): exact subtraction, no cancellation at r -> 1
        QuadResult f = specfun::hyp2f1_w(0.5 * (d + sp), 0.5 * (2.0 + sp), 0.5 * d, r * r,
                                         (1.0 - r) * (1.0 + r));
        v = sphere_area(d) * f.value;
    }
    return {d, s, p, r, v};
}

/// Independent route: the t-integral definition of Phi (d >= 2), by quadrature.
inline QuadResult phi_t_integral(int d, double s, double p, double r, double tol = 1e-12) {
    const double sp = s * p;
    if (d == 1) {
        double v = std::pow(1.0 - r, -1.0 - sp) + std::pow(1.0 + r, -1.0 - sp);
        return {v, 1e-15 * v, 1};
    }
    const double expo = 0.5 * (d - 3);
    const double surf = sphere_area(d - 1);  // |S^{d-2}|
    quadrature::Integrand1D g(
        [=](double t, double da, double db) {
            // (1-t^2)^{(d-3)/2} = (da*db)^{(d-3)/2} on (-1,1)
            return std::pow(da * db, expo) *
                   std::pow(1.0 - 2.0 * t * r + r * r, -0.5 * (d + sp));
        },
        -1.0, 1.0, expo, expo);
    QuadResult q = quadrature::integrate_1d(g, tol);
    q.value *= surf;
    q.abs_err *= surf;
    return q;
}

/// Full-space constant, Eq.-(C)-style integral route. Works for any p >= 1 and for
/// s = 0 (where the kernel profile degenerates to the zero-order form).
inline ConstantReport constant_C(const HardyParams& q, double tol = tol::quad_target) {
    const Regime reg =
        (q.s > 0.0 && q.sp() + q.alpha + q.beta > q.d) ? Regime::full_punctured : Regime::full;
    require_admissible(q, reg, "constant_C");
    const double sp = q.sp(), al = q.alpha, be = q.beta, p = q.p;
    const double gam = q.gamma_full();
    const int d = q.d;
    const double s = q.s;
    quadrature::Integrand1D g(
        [=](double r, double da, double db) {
            // near r = 1 the exact endpoint distance carries the precision
            const double lr = (r <= 0.5) ? std::log(r) : std::log1p(-db);
            double lf = (sp - 1.0) * lr + logs::sum_exp2(al * lr, be * lr) +
                        p * logs::abs_one_minus_exp(gam * lr) +
                        detail::phi_log(d, s, p, r, db);
            (void)da;
            return std::exp(lf);
        },
        0.0, 1.0,
        gam >= 0.0 ? sp - 1.0 + std::min(al, be) : q.d - 1.0 - std::max(al, be),
        p - 1.0 - sp);
    QuadResult quad = quadrature::integrate_1d(g, tol, 13);
    detail::check_quad(quad, "constant_C");
    return {q, quad.value, q.s == 0.0 ? Method::limit_s0 : Method::integral, quad};
}

/// Full-space constant, p = 2 closed form (Gamma-ratio bracket). All Gamma ratios are
/// products with the entire reciprocal Gamma, so the formula is total on the
/// admissible set (weight exponents hitting Gamma poles contribute zero terms).
inline ConstantReport constant_C_closed_p2(const HardyParams& q) {
    if (q.p != 2.0) throw std::invalid_argument("constant_C_closed_p2: requires p = 2");
    if (!(q.s > 0.0)) throw std::invalid_argument("constant_C_closed_p2: requires s > 0");
    // range hypotheses only: the bracket cancels identically on the excluded
    // hyperplane sp+alpha+beta = d, so the formula is total there (value 0)
    for (double x : {q.alpha, q.beta, q.alpha + q.beta})
        if (!(x > -q.sp() && x < q.d))
            throw validation_error("constant_C_closed_p2: weight exponent outside (-sp, d)");
    const double d = q.d, s = q.s, al = q.alpha, be = q.beta;
    const double gam = q.gamma_full();
    const double bracket = detail::lambda_ratio(d, gam + be, s) +
                           detail::lambda_ratio(d, gam + al, s) -
                           detail::lambda_ratio(d, be, s) - detail::lambda_ratio(d, al, s);
    const double pref = std::pow(M_PI, 0.5 * d) * std::abs(specfun::gamma(-s).value) *
                        specfun::rec_gamma(0.5 * (d + 2.0 * s));
    return {q, pref * bracket, Method::closed_form, std::nullopt};
}

inline double half_space_prefactor(int d, double sp) {
    return std::pow(M_PI, 0.5 * (d - 1)) * specfun::gamma(0.5 * (1.0 + sp)).value *
           specfun::rec_gamma(0.5 * (d + sp));
}

/// Half-space constant, Eq.-(D)-style integral route (any p >= 1, s in [0,1)).
inline ConstantReport constant_D(const HardyParams& q, double tol = tol::quad_target) {
    require_admissible(q, Regime::half, "constant_D");
    const double sp = q.sp(), al = q.alpha, be = q.beta, p = q.p;
    const double gam = q.gamma_half();
    quadrature::Integrand1D g(
        [=](double t, double da, double db) {
            const double lt = (t <= 0.5) ? std::log(t) : std::log1p(-db);
            double lf = logs::sum_exp2(al * lt, be * lt) +
                        p * logs::abs_one_minus_exp(-gam * lt) -
                        (1.0 + sp) * std::log(db);
            (void)da;
            return std::exp(lf);
        },
        0.0, 1.0,
        gam > 0.0 ? sp - 1.0 - std::max(al, be) : std::min(al, be),
        p - 1.0 - sp);
    QuadResult quad = quadrature::integrate_1d(g, tol, 13);
    detail::check_quad(quad, "constant_D");
    const double pref = half_space_prefactor(q.d, sp);
    return {q, pref * quad.value, q.s == 0.0 ? Method::limit_s0 : Method::integral,
            QuadResult{pref * quad.value, pref * quad.abs_err, quad.n_evals}};
}

/// Half-space constant, p = 2 closed form: the six-Beta-term bracket away from
/// s = 1/2, the cotangent formula on |s - 1/2| <= 1e-4 (its removable singularities
/// guarded by series). The bracket cancels identically on the excluded hyperplane
/// 1+alpha+beta = sp, so the closed form extends there with value 0.
inline ConstantReport constant_D_closed_p2(const HardyParams& q) {
    if (q.p != 2.0) throw std::invalid_argument("constant_D_closed_p2: requires p = 2");
    if (!(q.s > 0.0 && q.s < 1.0))
        throw std::invalid_argument("constant_D_closed_p2: requires s in (0,1)");
    // admissibility except for the hyperplane (the closed form is total there)
    const double al = q.alpha, be = q.beta, s = q.s, d = q.d;
    for (double x : {al, be, al + be})
        if (!(x > -1.0 && x < q.sp()))
            throw validation_error("constant_D_closed_p2: weight exponent outside (-1, sp)");
    double value;
    if (std::abs(s - 0.5) <= tol::near_half) {
        const double bracket = detail::t_cot(al - be, 0.5 * M_PI) - detail::t_cot(al, M_PI) -
                               detail::t_cot(be, M_PI);
        value = std::pow(M_PI, 0.5 * (d + 1.0)) * specfun::rec_gamma(0.5 * (d + 1.0)) * bracket;
    } else {
        auto B = [](double x, double y) { return specfun::beta_ext(x, y).value; };
        const double m2s = -2.0 * s;
        const double bracket = B(al + 1.0, m2s) + B(be + 1.0, m2s) + B(2.0 * s - al, m2s) +
                               B(2.0 * s - be, m2s) -
                               2.0 * B(s + 0.5 * (al - be + 1.0), m2s) -
                               2.0 * B(s + 0.5 * (be - al + 1.0), m2s);
        value = half_space_prefactor(q.d, 2.0 * s) * bracket;
    }
    return {q, value, Method::closed_form, std::nullopt};
}

/// The alpha = beta = 0 specialization of the half-space constant (Bogdan-Dyda).
inline double bogdan_dyda(int d, double s) {
    const double B = specfun::beta_ext(0.5 * (1.0 + 2.0 * s), 1.0 - s).value;
    const double f4s = std::pow(4.0, s);
    return half_space_prefactor(d, 2.0 * s) * (B - f4s) / (s * f4s);
}

/// gamma-function of the half-space fractional Laplacian power identity,
/// fgamm(a,b) = int_0^1 (t^b-1)(1-t^{a-b-1})(1-t)^{-1-a} dt, a in (0,2), b in (-1,a).
/// Beta route B(b+1,-a)+B(a-b,-a)+1/a away from the a = 1 pole pair, quadrature there.
inline double fgamm_beta(double a, double b) {
    return specfun::beta_ext(b + 1.0, -a).value + specfun::beta_ext(a - b, -a).value + 1.0 / a;
}

inline QuadResult fgamm_quad(double a, double b, double tol = 1e-12) {
    quadrature::Integrand1D g(
        [=](double t, double da, double db) {
            (void)da;
            const double lt = (t <= 0.5) ? std::log(t) : std::log1p(-db);
            const double f1 = std::expm1(b * lt);                 // t^b - 1
            const double f2 = -std::expm1((a - b - 1.0) * lt);    // 1 - t^{a-b-1}
            return f1 * f2 * std::pow(db, -1.0 - a);
        },
        0.0, 1.0, std::min(b, 0.0) + std::min(a - b - 1.0, 0.0), 1.0 - a);
    return quadrature::integrate_1d(g, tol, 13);
}

inline double fgamm(double a, double b) {
    if (!(a > 0.0 && a < 2.0 && b > -1.0 && b < a))
        throw std::invalid_argument("fgamm: requires a in (0,2), b in (-1,a)");
    if (std::abs(a - 1.0) < 1e-6) {
        QuadResult q = fgamm_quad(a, b);
        detail::check_quad(q, "fgamm");
        return q.value;
    }
    return fgamm_beta(a, b);
}

/// s = 0 full-space constant: the zero-order kernel integral.
inline ConstantReport constant_C_s0(const HardyParams& q, double tol = tol::quad_target) {
    if (q.s != 0.0) throw std::invalid_argument("constant_C_s0: requires s = 0");
    require_admissible(q, Regime::full, "constant_C_s0");
    const double al = q.alpha, be = q.beta, p = q.p;
    const double g0 = (q.d - al - be) / p;
    quadrature::Integrand1D g(
        [=](double r, double da, double db) {
            (void)da;
            const double lr = (r <= 0.5) ? std::log(r) : std::log1p(-db);
            double lf = logs::sum_exp2((al - 1.0) * lr, (be - 1.0) * lr) +
                        p * logs::abs_one_minus_exp(g0 * lr) - std::log(db) -
                        std::log1p(r);
            return std::exp(lf);
        },
        0.0, 1.0, std::min(al, be) - 1.0, p - 1.0);
    QuadResult quad = quadrature::integrate_1d(g, tol, 13);
    detail::check_quad(quad, "constant_C_s0");
    const double pref = sphere_area(q.d);
    return {q, pref * quad.value, Method::limit_s0,
            QuadResult{pref * quad.value, pref * quad.abs_err, quad.n_evals}};
}

/// s = 0, p = 2 full-space constant: the four-digamma closed form.
inline ConstantReport constant_C_s0_closed_p2(const HardyParams& q) {
    if (q.s != 0.0 || q.p != 2.0)
        throw std::invalid_argument("constant_C_s0_closed_p2: requires s = 0, p = 2");
    require_admissible(q, Regime::full, "constant_C_s0_closed_p2");
    const double d = q.d, al = q.alpha, be = q.beta;
    auto psi = [](double x) { return specfun::digamma(x).value; };
    const double bracket = 2.0 * psi(0.25 * (d - al + be)) + 2.0 * psi(0.25 * (d + al - be)) -
                           psi(0.5 * al) - psi(0.5 * be) - psi(0.5 * (d - al)) -
                           psi(0.5 * (d - be));
    const double pref = std::pow(M_PI, 0.5 * d) * specfun::rec_gamma(0.5 * d);
    return {q, pref * bracket, Method::closed_form, std::nullopt};
}

/// s = 0, p = 2 half-space constant: the digamma closed form.
inline ConstantReport constant_D_s0_closed_p2(const HardyParams& q) {
    if (q.s != 0.0 || q.p != 2.0)
        throw std::invalid_argument("constant_D_s0_closed_p2: requires s = 0, p = 2");
    // per-exponent ranges only: the bracket vanishes identically on the degenerate
    // boundary alpha+beta = -1, so the formula extends there
    for (double x : {q.alpha, q.beta})
        if (!(x > -1.0 && x < 0.0))
            throw validation_error("constant_D_s0_closed_p2: weight exponent outside (-1, 0)");
    const double d = q.d, al = q.alpha, be = q.beta;
    auto psi = [](double x) { return specfun::digamma(x).value; };
    const double bracket = 2.0 * psi(0.5 * (al - be + 1.0)) + 2.0 * psi(0.5 * (be - al + 1.0)) -
                           psi(al + 1.0) - psi(-al) - psi(be + 1.0) - psi(-be);
    const double pref = std::pow(M_PI, 0.5 * d) * specfun::rec_gamma(0.5 * d);
    return {q, pref * bracket, Method::closed_form, std::nullopt};
}

/// Remainder coefficient c_p = min over (0,1/2) of (1-tau)^p - tau^p + p tau^{p-1},
/// with its minimizer. For p = 2 the objective is identically 1.
struct RemainderCoeff {
    double p = 2.0;
    double c_p = 1.0;
    double tau_star = 0.25;
};

inline RemainderCoeff remainder_coeff(double p) {
    if (!(p >= 2.0)) throw std::invalid_argument("remainder_coeff: requires p >= 2");
    if (p == 2.0) return {2.0, 1.0, 0.25};
    auto h = [p](double t) { return std::pow(1.0 - t, p) - std::pow(t, p) + p * std::pow(t, p - 1.0); };
    auto dh = [p](double t) {
        return (p - 1.0) * std::pow(t, p - 2.0) - std::pow(1.0 - t, p - 1.0) -
               std::pow(t, p - 1.0);
    };
    // bracket the sign change of h' with a coarse scan, then bisect
    double lo = 1e-9, hi = 0.5 - 1e-9;
    const int n_scan = 512;
    double prev_t = lo, prev_d = dh(lo);
    for (int i = 1; i <= n_scan; ++i) {
        double t = lo + (hi - lo) * i / n_scan;
        double dv = dh(t);
        if (prev_d < 0.0 && dv >= 0.0) {
            lo = prev_t;
            hi = t;
            break;
        }
        prev_t = t;
        prev_d = dv;
    }
    for (int it = 0; it < 200 && hi - lo > 1e-16; ++it) {
        double mid = 0.5 * (lo + hi);
        (dh(mid) < 0.0 ? lo : hi) = mid;
    }
    double tau = 0.5 * (lo + hi);
    double best = h(tau);
    // endpoint comparison: h -> 1 at 0+, h(1/2) = p 2^{1-p} (pm the vanishing pair)
    if (1.0 < best) {
        best = 1.0;
        tau = 0.0;
    }
    const double at_half = h(0.5 - 1e-13);
    if (at_half < best) {
        best = at_half;
        tau = 0.5;
    }
    return {p, best, tau};
}

}  // namespace hardy::constants
