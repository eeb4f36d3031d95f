#pragma once

#include <algorithm>
#include <cmath>
#include <functional>
#include <optional>
#include <random>
#include <utility>
#include <vector>

#include "hardy/constants.hpp"
#include "hardy/core.hpp"
#include "hardy/profiles.hpp"
#include "hardy/quadrature.hpp"

// Numerical verification of the Hardy inequalities: radial / half-space reductions of
// the weighted Gagliardo seminorm for trial profiles, the p = 2 ground-state identity,
// the p >= 2 remainder bound, the mixed-weight positivity chain behind the
// Hardy-Sobolev-Maz'ya estimate, and the interval inequality.
//
// Full-space and half-space seminorms are evaluated in log-radial coordinates
// (r = e^x), where kernels and profiles combine into exponents that stay moderate even
// for the sharpness family whose supports span e^{+-300}. The square over the support
// is split along the diagonal; the unbounded complements enter through
// exponentially-folded tail integrals (the t -> 1/t folding of the reductions).

namespace hardy::verifier {

using profiles::ProfileFunction;

struct SeminormBreakdown {
    QuadResult lhs;           ///< weighted Gagliardo seminorm of the trial function
    double rhs_constant = 0;  ///< sharp constant for these parameters
    QuadResult rhs_integral;  ///< weighted L^p mass
    std::optional<QuadResult> remainder;

    double quotient() const {
        return rhs_integral.value > 0.0 ? lhs.value / rhs_integral.value : 0.0;
    }
};

namespace detail {

using constants::logs::abs_one_minus_exp;
using constants::logs::sum_exp2;

inline constexpr double ninf = -std::numeric_limits<double>::infinity();

/// Non-owning log-space view of a trial function; allows the ground-state shift
/// v = u * t^{gamma} without materialising a new profile.
struct ProfileView {
    std::function<double(double)> logv;
    std::function<double(double)> dlogv;
    double la = 0.0, lb = 1.0;
    std::vector<double> breaks{};
    bool zero = true;

    bool breakpoint_between(double xlo, double xhi) const {
        for (double b : breaks)
            if (b > xlo && b < xhi) return true;
        return false;
    }
};

inline ProfileView view_of(const ProfileFunction& u) {
    ProfileView v;
    v.zero = u.is_zero();
    if (v.zero) return v;
    auto [la, lb] = u.log_support();
    v.la = la;
    v.lb = lb;
    v.breaks = u.log_breakpoints();
    v.logv = [&u](double x) { return u.logv(x); };
    v.dlogv = [&u](double x) { return u.dlogv(x); };
    return v;
}

inline ProfileView shifted_view(const ProfileFunction& u, double gamma) {
    ProfileView v = view_of(u);
    if (v.zero) return v;
    v.logv = [&u, gamma](double x) {
        const double lu = u.logv(x);
        return lu == ninf ? ninf : lu + gamma * x;
    };
    v.dlogv = [&u, gamma](double x) { return u.dlogv(x) + gamma; };
    return v;
}

/// log|u(e^x) - u(e^y)| via the profile's log values; near the diagonal the log-value
/// difference is formed from the midpoint derivative instead of subtraction (the
/// direct difference of O(1..100) numbers has absolute error ~1e-14, which dominates
/// exactly where the kernel is singular).
inline double log_diff_profile(const ProfileView& u, double x, double y, double dxy) {
    const double px = u.logv(x), py = u.logv(y);
    const double m = std::max(px, py);
    if (m == ninf) return ninf;
    double adphi;
    if (dxy < 1e-6 && px != ninf && py != ninf &&
        !u.breakpoint_between(std::min(x, y), std::max(x, y)))
        adphi = std::abs(u.dlogv(0.5 * (x + y))) * dxy;
    else
        adphi = std::abs(px - py);
    if (adphi == 0.0) return ninf;
    return m + std::log1p(-std::exp(-adphi));
}

/// Reduced 1-D kernel in log coordinates. The weight factor is e^{-wx x - wy y} (plus
/// the swapped term when symmetrized), the polar Jacobians contribute e^{d(x+y)}, and
/// the angular part is Phi_{d,s,p} for the full-space radial reduction or the bare
/// |e^x - e^y|^{-1-sp} factor for the half-space line reduction.
struct ReducedKernel {
    int d = 1;
    double s = 0.5, p = 2.0;
    double wx = 0.0, wy = 0.0;
    bool full_phi = true;
    bool symmetrize = true;

    double sp() const { return s * p; }

    bool symmetric() const { return symmetrize || wx == wy; }

    double log_at(double x, double y, double dxy) const {
        const double m = std::max(x, y);
        double lw;
        if (symmetrize)
            lw = sum_exp2(-wx * x - wy * y, -wy * x - wx * y) + std::log(0.5);
        else
            lw = -wx * x - wy * y;
        const double w1m = -std::expm1(-dxy);  // 1 - e^{-dxy}, exact
        double lphi;
        if (full_phi)
            lphi = constants::detail::phi_log(d, s, p, std::exp(-dxy), w1m);
        else
            lphi = -(1.0 + sp()) * std::log(w1m);
        return lw + d * (x + y) - (d + sp()) * m + lphi;
    }

    // exponential decay rates in the moving slot (must be positive for convergence)
    double decay_low(bool moving_is_y) const {
        const double w = symmetrize ? std::max(wx, wy) : (moving_is_y ? wy : wx);
        return d - w;
    }
    double decay_high(bool moving_is_y) const {
        const double w = symmetrize ? std::min(wx, wy) : (moving_is_y ? wy : wx);
        return sp() + w;
    }
};

struct SeminormParts {
    double main_lower = 0.0, main_upper = 0.0;  // support square, y < x / y > x
    double tail_y_low = 0.0, tail_y_high = 0.0;
    double tail_x_low = 0.0, tail_x_high = 0.0;
    double err = 0.0;
    long n_evals = 0;

    double total() const {
        return main_lower + main_upper + tail_y_low + tail_y_high + tail_x_low + tail_x_high;
    }
    /// the y < x half (used by the positivity chain)
    double lower_half() const { return main_lower + tail_y_low + tail_x_high; }
};

inline quadrature::QuadResult2D main_square(const ReducedKernel& k, const ProfileView& u,
                                            double tol, int max_level) {
    quadrature::Integrand2D g;
    g.f = [&k, &u](double x, double y, double dxy) {
        const double lu = log_diff_profile(u, x, y, dxy);
        if (lu == ninf) return 0.0;
        return std::exp(k.p * lu + k.log_at(x, y, dxy));
    };
    g.a = u.la;
    g.b = u.lb;
    g.sigma_diag = k.p - 1.0 - k.sp();
    g.breaks = u.breaks;
    return quadrature::integrate_2d_split(g, tol, max_level);
}

/// Tail over the complement on one side: the moving variable runs over (-inf, la)
/// (side_low) or (lb, +inf), exponentially folded onto (0,1); the fixed variable runs
/// over the support weighted by |u|^p. cut_log truncates the high side at a finite
/// bound instead (for truncated-domain comparisons).
inline QuadResult tail_directed(const ReducedKernel& k, const ProfileView& u, bool moving_is_y,
                                bool side_low, double tol, int max_level,
                                std::optional<double> cut_log = std::nullopt) {
    const double lambda = side_low ? k.decay_low(moving_is_y) : k.decay_high(moving_is_y);
    if (!(lambda > 0.0))
        throw validation_error("seminorm tail does not converge for these weight exponents");
    QuadResult out{0.0, 0.0, 0};
    const double bound = side_low ? u.la : u.lb;

    auto kernel_at = [&](double fixed, double moving) {
        const double dxy = std::abs(fixed - moving);
        return moving_is_y ? k.log_at(fixed, moving, dxy) : k.log_at(moving, fixed, dxy);
    };

    // log of the inner tail integral at fixed coordinate xf
    auto tail_factor = [&](double xf) -> double {
        const double cref =
            kernel_at(xf, side_low ? bound - 1.0 / lambda : bound + 1.0 / lambda);
        if (!std::isfinite(cref)) return ninf;
        QuadResult inner;
        if (!side_low && cut_log) {
            if (!(*cut_log > u.lb)) return ninf;
            quadrature::Integrand1D seg(
                [&](double ym, double, double) { return std::exp(kernel_at(xf, ym) - cref); },
                u.lb, *cut_log, 0.0, 0.0);
            inner = quadrature::integrate_1d(seg, tol, max_level);
        } else {
            quadrature::Integrand1D seg(
                [&](double z, double, double) {
                    if (z <= 0.0) return 0.0;
                    const double ym = side_low ? bound + std::log(z) / lambda
                                               : bound - std::log(z) / lambda;
                    return std::exp(kernel_at(xf, ym) - cref - std::log(lambda * z));
                },
                0.0, 1.0, 0.0, 0.0);
            inner = quadrature::integrate_1d(seg, tol, max_level);
        }
        out.n_evals += inner.n_evals;
        return inner.value > 0.0 ? cref + std::log(inner.value) : ninf;
    };

    auto pts = quadrature::detail::panel_points(u.la, u.lb, u.breaks);
    for (std::size_t i = 0; i + 1 < pts.size(); ++i) {
        quadrature::Integrand1D outer(
            [&](double xf, double, double) {
                const double lu = u.logv(xf);
                if (lu == ninf) return 0.0;
                const double lt = tail_factor(xf);
                if (lt == ninf) return 0.0;
                return std::exp(k.p * lu + lt);
            },
            pts[i], pts[i + 1], 0.0, 0.0);
        QuadResult part = quadrature::integrate_1d(outer, tol, max_level);
        out.value += part.value;
        out.abs_err += part.abs_err;
        out.n_evals += part.n_evals;
    }
    return out;
}

inline SeminormParts seminorm_parts(const ReducedKernel& k, const ProfileView& u, double tol,
                                    int max_level = 9,
                                    std::optional<double> cut_log = std::nullopt) {
    SeminormParts parts;
    if (u.zero) return parts;
    auto sq = main_square(k, u, tol, max_level);
    parts.main_lower = sq.lower_triangle;
    parts.main_upper = sq.upper_triangle;
    parts.err += sq.total.abs_err;
    parts.n_evals += sq.total.n_evals;

    auto add = [&parts](QuadResult q, double& slot) {
        slot = q.value;
        parts.err += q.abs_err;
        parts.n_evals += q.n_evals;
    };
    // y below the support pairs with y < x (lower triangle); y above with y > x.
    add(tail_directed(k, u, true, true, tol, max_level, cut_log), parts.tail_y_low);
    add(tail_directed(k, u, true, false, tol, max_level, cut_log), parts.tail_y_high);
    if (k.symmetric()) {
        parts.tail_x_low = parts.tail_y_low;
        parts.tail_x_high = parts.tail_y_high;
        parts.err *= 1.5;
    } else {
        add(tail_directed(k, u, false, true, tol, max_level, cut_log), parts.tail_x_low);
        add(tail_directed(k, u, false, false, tol, max_level, cut_log), parts.tail_x_high);
    }
    return parts;
}

/// Weighted L^p mass in log coordinates: int |u|^p e^{c x} dx over the support.
inline QuadResult mass_integral(const ProfileView& u, double p, double c, double tol,
                                int max_level = 11) {
    QuadResult out{0.0, 0.0, 0};
    if (u.zero) return out;
    auto pts = quadrature::detail::panel_points(u.la, u.lb, u.breaks);
    for (std::size_t i = 0; i + 1 < pts.size(); ++i) {
        quadrature::Integrand1D seg(
            [&u, p, c](double x, double, double) {
                const double lu = u.logv(x);
                if (lu == ninf) return 0.0;
                return std::exp(p * lu + c * x);
            },
            pts[i], pts[i + 1], 0.0, 0.0);
        QuadResult q = quadrature::integrate_1d(seg, tol, max_level);
        out.value += q.value;
        out.abs_err += q.abs_err;
        out.n_evals += q.n_evals;
    }
    return out;
}

inline ReducedKernel full_kernel(const HardyParams& q) {
    return {q.d, q.s, q.p, q.alpha, q.beta, true, true};
}

inline ReducedKernel half_kernel(const HardyParams& q) {
    return {1, q.s, q.p, -q.alpha, -q.beta, false, true};
}

inline double full_constant(const HardyParams& q) {
    if (q.p == 2.0 && q.s > 0.0) return constants::constant_C_closed_p2(q).constant;
    return constants::constant_C(q).constant;
}

inline double half_constant(const HardyParams& q) {
    if (q.p == 2.0 && q.s > 0.0) return constants::constant_D_closed_p2(q).constant;
    return constants::constant_D(q).constant;
}

}  // namespace detail

/// E[u] vs C int |u|^p weight for a radial profile on the (punctured) full space.
/// lhs carries the |S^{d-1}| factor of the angular reduction; rhs_integral is
/// |S^{d-1}| int |u(r)|^p r^{d-1-sp-alpha-beta} dr.
inline SeminormBreakdown rayleigh_full_radial(const HardyParams& q, const ProfileFunction& u,
                                              double tol = 1e-8) {
    const Regime reg =
        (q.s > 0.0 && q.sp() + q.alpha + q.beta > q.d) ? Regime::full_punctured : Regime::full;
    require_admissible(q, reg, "rayleigh_full_radial");
    SeminormBreakdown out;
    out.rhs_constant = detail::full_constant(q);
    if (u.is_zero()) return out;
    const double surf = sphere_area(q.d);
    auto v = detail::view_of(u);
    auto parts = detail::seminorm_parts(detail::full_kernel(q), v, tol);
    out.lhs = {surf * parts.total(), surf * parts.err, parts.n_evals};
    auto m = detail::mass_integral(v, q.p, q.d - q.sp() - q.alpha - q.beta, tol * 0.1);
    out.rhs_integral = {surf * m.value, surf * m.abs_err, m.n_evals};
    return out;
}

/// Half-space reduction for trial functions u(x) = phi(x_d): the x' integral collapses
/// into the Gamma prefactor, leaving a 1-D double integral in (x_d, y_d).
inline SeminormBreakdown rayleigh_half_profile(const HardyParams& q, const ProfileFunction& u,
                                               double tol = 1e-8) {
    require_admissible(q, Regime::half, "rayleigh_half_profile");
    SeminormBreakdown out;
    out.rhs_constant = detail::half_constant(q);
    if (u.is_zero()) return out;
    const double pref = constants::half_space_prefactor(q.d, q.sp());
    auto v = detail::view_of(u);
    auto parts = detail::seminorm_parts(detail::half_kernel(q), v, tol);
    out.lhs = {pref * parts.total(), pref * parts.err, parts.n_evals};
    auto m = detail::mass_integral(v, q.p, 1.0 + q.alpha + q.beta - q.sp(), tol * 0.1);
    out.rhs_integral = {m.value, m.abs_err, m.n_evals};
    return out;
}

/// Ground-state identity at p = 2: E[u] - C int|u|^2 weight = E_w[v] with v = u/w.
/// Returns |E - C M - E_w| / max(E, eps). Exact in exact arithmetic for both regimes.
inline double ground_state_identity_p2(const HardyParams& q, const ProfileFunction& u,
                                       Regime regime, double tol = 1e-9) {
    if (q.p != 2.0) throw std::invalid_argument("ground_state_identity_p2: requires p = 2");
    if (u.is_zero()) return 0.0;
    auto v = detail::view_of(u);
    double E, M, C, Ew;
    if (regime == Regime::half) {
        require_admissible(q, Regime::half, "ground_state_identity_p2");
        const double pref = constants::half_space_prefactor(q.d, q.sp());
        E = pref * detail::seminorm_parts(detail::half_kernel(q), v, tol).total();
        M = detail::mass_integral(v, q.p, 1.0 + q.alpha + q.beta - q.sp(), tol * 0.1).value;
        C = (q.s == 0.0) ? constants::constant_D_s0_closed_p2(q).constant
                         : constants::constant_D_closed_p2(q).constant;
        const double gam = q.gamma_half();
        auto vw = detail::shifted_view(u, gam);
        // ground-state-weighted kernel: x^{alpha-gamma} y^{beta-gamma} (+ swap)
        detail::ReducedKernel kw{1, q.s, q.p, gam - q.alpha, gam - q.beta, false, true};
        Ew = pref * detail::seminorm_parts(kw, vw, tol).total();
    } else {
        const Regime reg = (q.s > 0.0 && q.sp() + q.alpha + q.beta > q.d)
                               ? Regime::full_punctured
                               : Regime::full;
        require_admissible(q, reg, "ground_state_identity_p2");
        const double surf = sphere_area(q.d);
        E = surf * detail::seminorm_parts(detail::full_kernel(q), v, tol).total();
        M = surf * detail::mass_integral(v, q.p, q.d - q.sp() - q.alpha - q.beta, tol * 0.1).value;
        C = (q.s == 0.0) ? constants::constant_C_s0_closed_p2(q).constant
                         : constants::constant_C_closed_p2(q).constant;
        const double gam = q.gamma_full();
        auto vw = detail::shifted_view(u, gam);
        detail::ReducedKernel kw{q.d, q.s, q.p, q.alpha + gam, q.beta + gam, true, true};
        Ew = surf * detail::seminorm_parts(kw, vw, tol).total();
    }
    return std::abs(E - C * M - Ew) / std::max(E, 1e-300);
}

/// Remainder inequality for p >= 2: E[u] - C int|u|^p weight >= c_p E_w[v].
/// Returns the margin relative to E[u] (nonnegative up to quadrature error; zero at
/// p = 2 where the inequality is an identity).
inline double remainder_positivity(const HardyParams& q, const ProfileFunction& u,
                                   Regime regime, double tol = 1e-9) {
    if (!(q.p >= 2.0)) throw std::invalid_argument("remainder_positivity: requires p >= 2");
    if (u.is_zero()) return 0.0;
    const double cp = constants::remainder_coeff(q.p).c_p;
    auto v = detail::view_of(u);
    double E, M, C, Ew;
    if (regime == Regime::half) {
        require_admissible(q, Regime::half, "remainder_positivity");
        const double pref = constants::half_space_prefactor(q.d, q.sp());
        E = pref * detail::seminorm_parts(detail::half_kernel(q), v, tol).total();
        M = detail::mass_integral(v, q.p, 1.0 + q.alpha + q.beta - q.sp(), tol * 0.1).value;
        C = detail::half_constant(q);
        const double gam = q.gamma_half();
        auto vw = detail::shifted_view(u, gam);
        detail::ReducedKernel kw{1, q.s, q.p, gam - q.alpha, gam - q.beta, false, true};
        Ew = pref * detail::seminorm_parts(kw, vw, tol).total();
    } else {
        const Regime reg = (q.s > 0.0 && q.sp() + q.alpha + q.beta > q.d)
                               ? Regime::full_punctured
                               : Regime::full;
        require_admissible(q, reg, "remainder_positivity");
        const double surf = sphere_area(q.d);
        E = surf * detail::seminorm_parts(detail::full_kernel(q), v, tol).total();
        M = surf * detail::mass_integral(v, q.p, q.d - q.sp() - q.alpha - q.beta, tol * 0.1).value;
        C = detail::full_constant(q);
        const double gam = q.gamma_full();
        auto vw = detail::shifted_view(u, gam);
        detail::ReducedKernel kw{q.d, q.s, q.p, q.alpha + gam, q.beta + gam, true, true};
        Ew = surf * detail::seminorm_parts(kw, vw, tol).total();
    }
    return (E - C * M - cp * Ew) / std::max(E, 1e-300);
}

/// The two displayed estimates of the Hardy-Sobolev-Maz'ya proof, for v = u w^{-1} on
/// the half-line reduction (assuming alpha >= beta; swapped otherwise):
///   full mixed seminorm >= {x > y} part >= {x > y} with the ratio weight dropped,
/// and the last equals half of the symmetric-weight seminorm.
struct HsmChainReport {
    double full_mixed = 0.0;
    double lower_mixed = 0.0;
    double lower_plain = 0.0;
    double half_symmetric = 0.0;
    double gap_drop = 0.0;    ///< full_mixed - lower_mixed (>= 0: dropped region)
    double gap_ratio = 0.0;   ///< lower_mixed - lower_plain (>= 0: (x/y)^{(a-b)/2} >= 1)
    double eq_residual = 0.0; ///< |lower_plain - half_symmetric| / half_symmetric
    long n_evals = 0;
};

inline HsmChainReport hsm_positivity_chain(const HardyParams& q0, const ProfileFunction& u,
                                           double tol = 1e-8) {
    if (!(q0.p >= 2.0)) throw std::invalid_argument("hsm_positivity_chain: requires p >= 2");
    if (!(q0.sp() < q0.d))
        throw validation_error("hsm_positivity_chain: requires sp < d");
    HardyParams q = q0;
    if (q.alpha < q.beta) std::swap(q.alpha, q.beta);
    require_admissible(q, Regime::half, "hsm_positivity_chain");
    HsmChainReport rep;
    if (u.is_zero()) return rep;
    const double sp = q.sp();
    const double ax = 0.5 * (sp - 1.0 + q.alpha - q.beta);
    const double ay = 0.5 * (sp - 1.0 - q.alpha + q.beta);
    auto vw = detail::shifted_view(u, q.gamma_half());
    detail::ReducedKernel mixed{1, q.s, q.p, -ax, -ay, false, false};
    detail::ReducedKernel plain{1, q.s, q.p, -0.5 * (sp - 1.0), -0.5 * (sp - 1.0), false, false};
    auto pm = detail::seminorm_parts(mixed, vw, tol);
    auto pp = detail::seminorm_parts(plain, vw, tol);
    rep.full_mixed = pm.total();
    rep.lower_mixed = pm.lower_half();
    rep.lower_plain = pp.lower_half();
    rep.half_symmetric = 0.5 * pp.total();
    rep.gap_drop = rep.full_mixed - rep.lower_mixed;
    rep.gap_ratio = rep.lower_mixed - rep.lower_plain;
    rep.eq_residual =
        std::abs(rep.lower_plain - rep.half_symmetric) / std::max(rep.half_symmetric, 1e-300);
    rep.n_evals = pm.n_evals + pp.n_evals;
    return rep;
}

/// Interval inequality on J = (0,1): weight d_J(x)^alpha d_J(y)^beta with
/// d_J(x) = min(x, 1-x), compared against D(1,s,p,alpha,beta) and the weighted mass
/// int |u|^p d_J^{alpha+beta-sp}. Linear coordinates (supports are moderate here).
inline SeminormBreakdown interval_inequality(const ProfileFunction& u, const HardyParams& q0,
                                             double tol = 1e-8) {
    HardyParams q = q0;
    q.d = 1;
    require_admissible(q, Regime::interval, "interval_inequality");
    SeminormBreakdown out;
    out.rhs_constant = detail::half_constant(q);
    if (u.is_zero()) return out;
    auto [la, lb] = u.log_support();
    const double a = std::exp(la), b = std::exp(lb);
    if (!(a > 0.0 && b < 1.0))
        throw std::invalid_argument("interval_inequality: profile support must lie in (0,1)");
    const double sp = q.sp(), p = q.p, al = q.alpha, be = q.beta;

    auto dJ = [](double t) { return std::min(t, 1.0 - t); };
    // m(y) evaluated from an exact boundary distance where one is available
    auto weight_d = [&](double x, double my) {
        const double mx = dJ(x);
        return 0.5 * (std::pow(mx, al) * std::pow(my, be) + std::pow(mx, be) * std::pow(my, al));
    };
    auto weight = [&](double x, double y) { return weight_d(x, dJ(y)); };

    std::vector<double> breaks;
    for (double t : u.log_breakpoints()) breaks.push_back(std::exp(t));
    breaks.push_back(0.5);

    quadrature::Integrand2D g;
    g.f = [&](double x, double y, double dxy) {
        const double du = u.diff_linear(x, y, dxy);
        if (du == 0.0) return 0.0;
        return std::pow(du, p) * weight(x, y) * std::pow(dxy, -1.0 - sp);
    };
    g.a = a;
    g.b = b;
    g.sigma_diag = p - 1.0 - sp;
    g.breaks = breaks;
    auto sq = quadrature::integrate_2d_split(g, tol);

    // strips: y in (0,a) and (b,1) against |u(x)|^p, doubled by symmetry
    long n_evals = sq.total.n_evals;
    double err = sq.total.abs_err;
    auto strip_at = [&](double x) {
        double tot = 0.0;
        std::vector<double> lo_panels{0.0, a};
        if (a > 0.5) lo_panels = {0.0, 0.5, a};  // weight kink at 1/2
        for (std::size_t i = 0; i + 1 < lo_panels.size(); ++i) {
            const bool from_zero = lo_panels[i] == 0.0;
            quadrature::Integrand1D seg(
                [&, from_zero](double y, double da, double) {
                    const double my = from_zero ? da : dJ(y);
                    return weight_d(x, my) * std::pow(x - y, -1.0 - sp);
                },
                lo_panels[i], lo_panels[i + 1], from_zero ? std::min(al, be) : 0.0,
                0.0);
            auto r = quadrature::integrate_1d(seg, tol * 0.1, 12);
            tot += r.value;
            n_evals += r.n_evals;
        }
        std::vector<double> hi_panels{b, 1.0};
        if (b < 0.5) hi_panels = {b, 0.5, 1.0};
        for (std::size_t i = 0; i + 1 < hi_panels.size(); ++i) {
            const bool to_one = hi_panels[i + 1] == 1.0;
            quadrature::Integrand1D seg(
                [&, to_one](double y, double, double db) {
                    const double my = to_one && y > 0.5 ? db : dJ(y);
                    return weight_d(x, my) * std::pow(y - x, -1.0 - sp);
                },
                hi_panels[i], hi_panels[i + 1], 0.0,
                to_one ? std::min(al, be) : 0.0);
            auto r = quadrature::integrate_1d(seg, tol * 0.1, 12);
            tot += r.value;
            n_evals += r.n_evals;
        }
        return tot;
    };
    double strips = 0.0;
    {
        auto pts = quadrature::detail::panel_points(a, b, breaks);
        for (std::size_t i = 0; i + 1 < pts.size(); ++i) {
            quadrature::Integrand1D outer(
                [&](double x, double, double) {
                    const double ux = u.value(x);
                    if (ux == 0.0) return 0.0;
                    return std::pow(ux, p) * strip_at(x);
                },
                pts[i], pts[i + 1], 0.0, 0.0);
            auto r = quadrature::integrate_1d(outer, tol, 10);
            strips += r.value;
            err += r.abs_err;
            n_evals += r.n_evals;
        }
    }
    out.lhs = {sq.total.value + 2.0 * strips, err, n_evals};

    double mass = 0.0;
    {
        auto pts = quadrature::detail::panel_points(a, b, breaks);
        for (std::size_t i = 0; i + 1 < pts.size(); ++i) {
            quadrature::Integrand1D seg(
                [&](double x, double, double) {
                    const double ux = u.value(x);
                    if (ux == 0.0) return 0.0;
                    return std::pow(ux, p) * std::pow(dJ(x), al + be - sp);
                },
                pts[i], pts[i + 1], 0.0, 0.0);
            auto r = quadrature::integrate_1d(seg, tol * 0.1, 10);
            mass += r.value;
            n_evals += r.n_evals;
        }
    }
    out.rhs_integral = {mass, tol * mass, n_evals};
    return out;
}

/// Quotients of the near-optimal sharpness family over a delta grid; non-increasing
/// and approaching the sharp constant from above.
inline std::vector<std::pair<double, double>> near_optimal_quotients(
    const HardyParams& q, Regime regime, const std::vector<double>& deltas, double tol = 1e-6) {
    std::vector<std::pair<double, double>> out;
    for (double delta : deltas) {
        const double gamma = (regime == Regime::half) ? q.gamma_half() : q.gamma_full();
        auto prof = ProfileFunction::near_optimal(gamma, delta);
        SeminormBreakdown br = (regime == Regime::half) ? rayleigh_half_profile(q, prof, tol)
                                                        : rayleigh_full_radial(q, prof, tol);
        out.emplace_back(delta, br.quotient());
    }
    return out;
}

/// E[u] restricted to pairs inside the centred ball of radius R (log cut at ln R),
/// for validating the reduced kernel against a Monte-Carlo estimate.
inline double radial_seminorm_truncated(const HardyParams& q, const ProfileFunction& u,
                                        double R, double tol = 1e-8) {
    auto v = detail::view_of(u);
    if (v.zero) return 0.0;
    if (!(std::log(R) > v.lb))
        throw std::invalid_argument("radial_seminorm_truncated: R must exceed the support");
    auto parts =
        detail::seminorm_parts(detail::full_kernel(q), v, tol, 9, std::make_optional(std::log(R)));
    return sphere_area(q.d) * parts.total();
}

/// Plain Monte-Carlo estimate of the same truncated double integral in d = 2:
/// 10^7-style sampling of uniform point pairs in the disk of radius R.
/// Returns (estimate, standard error).
inline std::pair<double, double> monte_carlo_full_2d(const HardyParams& q,
                                                     const ProfileFunction& u, double R,
                                                     long n_samples, unsigned long seed) {
    if (q.d != 2) throw std::invalid_argument("monte_carlo_full_2d: requires d = 2");
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> unif(0.0, 1.0);
    const double sp = q.sp();
    double sum = 0.0, sum2 = 0.0;
    for (long i = 0; i < n_samples; ++i) {
        const double r1 = R * std::sqrt(unif(rng));
        const double r2 = R * std::sqrt(unif(rng));
        const double th = 2.0 * M_PI * unif(rng);  // only the angle difference matters
        const double u1 = u.value(r1), u2 = u.value(r2);
        double f = 0.0;
        const double du = std::abs(u1 - u2);
        if (du > 0.0) {
            const double dist2 = r1 * r1 + r2 * r2 - 2.0 * r1 * r2 * std::cos(th);
            if (dist2 > 0.0) {
                const double w = 0.5 * (std::pow(r1, -q.alpha) * std::pow(r2, -q.beta) +
                                        std::pow(r1, -q.beta) * std::pow(r2, -q.alpha));
                f = std::pow(du, q.p) * w * std::pow(dist2, -0.5 * (q.d + sp));
            }
        }
        sum += f;
        sum2 += f * f;
    }
    const double vol = std::pow(M_PI * R * R, 2);
    const double mean = sum / n_samples;
    const double var = std::max(sum2 / n_samples - mean * mean, 0.0);
    return {mean * vol, std::sqrt(var / n_samples) * vol};
}

}  // namespace hardy::verifier
