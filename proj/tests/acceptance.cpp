// Acceptance suite: one pass/fail line per criterion, nonzero exit if any fail.
// Each criterion pins its tolerance in code; nothing is deferred to calibration.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <string>
#include <tuple>
#include <vector>

#include "hardy/constants.hpp"
#include "hardy/core.hpp"
#include "hardy/geometry.hpp"
#include "hardy/profiles.hpp"
#include "hardy/verifier.hpp"

using namespace hardy;
using profiles::ProfileFunction;
namespace cs = hardy::constants;
namespace vf = hardy::verifier;
namespace geo = hardy::geometry;

namespace {

int g_failures = 0;

void report(int id, bool pass, const std::string& what) {
    std::printf("criterion %2d: %s  %s\n", id, pass ? "PASS" : "FAIL", what.c_str());
    if (!pass) ++g_failures;
}

std::string fmt(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3g", v);
    return buf;
}

double rel(double a, double b) { return std::abs(a - b) / std::max(std::abs(b), 1e-300); }

// 1. closed form vs quadrature, full space, p = 2 grid; runtime <= 10 s
void criterion_1() {
    const auto t0 = std::chrono::steady_clock::now();
    double worst = 0.0;
    int n = 0;
    for (int d : {1, 2, 3})
        for (double s : {0.25, 0.5, 0.75})
            for (auto [al, be] : std::vector<std::pair<double, double>>{
                     {0.0, 0.0}, {0.3, -0.2}, {0.5, 0.5}}) {
                HardyParams q{d, s, 2.0, al, be};
                const Regime reg =
                    (q.sp() + al + be > d) ? Regime::full_punctured : Regime::full;
                if (!validate(q, reg).empty()) continue;
                ++n;
                worst = std::max(worst, rel(cs::constant_C(q).constant,
                                            cs::constant_C_closed_p2(q).constant));
            }
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    report(1, worst <= 1e-8 && secs <= 10.0 && n >= 20,
           "full-space closed vs quadrature: " + std::to_string(n) + " cases, max rel " +
               fmt(worst) + ", " + fmt(secs) + " s");
}

// 2. half space: grid away from s = 1/2; cot branch vs Richardson at s = 1/2; D = 0
void criterion_2() {
    double worst = 0.0;
    int n = 0;
    for (int d : {1, 2, 3})
        for (double s : {0.25, 0.45, 0.75})
            for (auto [al, be] : std::vector<std::pair<double, double>>{
                     {0.0, 0.0}, {0.3, -0.2}, {0.5, 0.5}}) {
                HardyParams q{d, s, 2.0, al, be};
                if (!validate(q, Regime::half).empty()) continue;
                ++n;
                worst = std::max(worst, rel(cs::constant_D(q).constant,
                                            cs::constant_D_closed_p2(q).constant));
            }
    double worst_rich = 0.0;
    for (auto [d, al, be] : std::vector<std::tuple<int, double, double>>{
             {1, 0.2, 0.1}, {2, 0.3, -0.4}, {3, 0.25, 0.25}}) {
        const double h = 1e-3;
        HardyParams qp{d, 0.5 + h, 2.0, al, be}, qm{d, 0.5 - h, 2.0, al, be},
            qc{d, 0.5, 2.0, al, be};
        const double rich = 0.5 * (cs::constant_D_closed_p2(qp).constant +
                                   cs::constant_D_closed_p2(qm).constant);
        worst_rich =
            std::max(worst_rich, std::abs(rich - cs::constant_D_closed_p2(qc).constant));
    }
    double worst_zero = 0.0;
    for (int d : {1, 2, 3}) {
        HardyParams q{d, 0.5, 2.0, 0.0, 0.0};
        worst_zero = std::max(worst_zero, std::abs(cs::constant_D_closed_p2(q).constant));
    }
    report(2, worst <= 1e-8 && worst_rich <= 1e-4 && worst_zero <= 1e-10 && n >= 20,
           "half-space closed vs quadrature (" + std::to_string(n) + " cases, max rel " +
               fmt(worst) + "), Richardson " + fmt(worst_rich) + ", D(d,1/2,2,0,0) " +
               fmt(worst_zero));
}

// 3. Bogdan-Dyda specialization to 1e-10
void criterion_3() {
    double worst = 0.0;
    for (int d : {1, 2, 3})
        for (double s : {0.25, 0.75}) {
            HardyParams q{d, s, 2.0, 0.0, 0.0};
            worst = std::max(worst, rel(cs::constant_D_closed_p2(q).constant,
                                        cs::bogdan_dyda(d, s)));
        }
    report(3, worst <= 1e-10, "Bogdan-Dyda value, max rel " + fmt(worst));
}

// 4. s -> 0 limits
void criterion_4() {
    double worst_lim = 0.0;
    for (auto [d, p, al, be] : std::vector<std::tuple<int, double, double, double>>{
             {3, 2.0, 1.0, 0.5}, {3, 2.0, 0.9, 0.6}, {3, 2.0, 1.1, 0.7}}) {
        HardyParams qs{d, 1e-3, p, al, be};
        HardyParams q0{d, 0.0, p, al, be};
        worst_lim = std::max(
            worst_lim, rel(cs::constant_C(qs).constant, cs::constant_C_s0(q0).constant));
    }
    double worst_dig = 0.0;
    for (auto [d, al, be] : std::vector<std::tuple<int, double, double>>{
             {2, 0.5, 0.7}, {3, 1.0, 0.5}, {1, 0.3, 0.3}}) {
        HardyParams q{d, 0.0, 2.0, al, be};
        worst_dig = std::max(worst_dig, rel(cs::constant_C_s0(q).constant,
                                            cs::constant_C_s0_closed_p2(q).constant));
    }
    for (auto [d, al, be] : std::vector<std::tuple<int, double, double>>{
             {1, -0.3, -0.4}, {3, -0.2, -0.7}}) {
        HardyParams q{d, 0.0, 2.0, al, be};
        worst_dig = std::max(worst_dig, rel(cs::constant_D(q).constant,
                                            cs::constant_D_s0_closed_p2(q).constant));
    }
    report(4, worst_lim <= 1e-2 && worst_dig <= 1e-8,
           "s->0: limit deviation " + fmt(worst_lim) + " (<= 1e-2), digamma vs quadrature " +
               fmt(worst_dig) + " (<= 1e-8)");
}

// 5. remainder coefficient c_p
void criterion_5() {
    bool ok = true;
    const auto c2 = cs::remainder_coeff(2.0);
    ok = ok && c2.c_p == 1.0;
    for (double tau : {0.1, 0.25, 0.4}) {
        const double h = std::pow(1.0 - tau, 2.0) - tau * tau + 2.0 * tau;
        ok = ok && std::abs(h - 1.0) <= 1e-14;
    }
    double worst = 0.0;
    for (double p : {2.5, 3.0, 4.0, 6.0, 10.0}) {
        const auto rc = cs::remainder_coeff(p);
        ok = ok && rc.c_p > 0.0;
        double best = std::numeric_limits<double>::infinity();
        for (double t = 1e-6; t < 0.5; t += 1e-6)
            best = std::min(best,
                            std::pow(1.0 - t, p) - std::pow(t, p) + p * std::pow(t, p - 1.0));
        worst = std::max(worst, std::abs(rc.c_p - best));
    }
    report(5, ok && worst <= 1e-6,
           "c_2 = 1 (constant objective), c_p > 0, grid-scan deviation " + fmt(worst));
}

// 6. inequality property suite + sharpness family
void criterion_6() {
    int n = 0, holds = 0;
    std::vector<std::pair<HardyParams, ProfileFunction>> full_cases = {
        {{1, 0.4, 2.0, 0.1, 0.2}, ProfileFunction::tent(1.0, 2.0)},
        {{1, 0.4, 2.0, 0.1, 0.2}, ProfileFunction::smooth_bump(1.0, 2.0)},
        {{1, 0.4, 2.0, 0.1, 0.2}, ProfileFunction::truncated_power(-0.2, 0.5, 2.0)},
        {{2, 0.3, 2.0, 0.1, 0.1}, ProfileFunction::smooth_bump(0.5, 3.0)},
        {{3, 0.5, 2.0, 0.5, -0.3}, ProfileFunction::tent(1.0, 2.0)},
        {{1, 0.6, 1.5, 0.2, 0.1}, ProfileFunction::smooth_bump(1.0, 2.0)},
        {{1, 0.5, 3.0, 0.4, 0.3}, ProfileFunction::tent(0.5, 2.0)},
        {{2, 0.25, 2.0, -0.3, 0.4}, ProfileFunction::smooth_bump(1.0, 4.0)},
        {{2, 0.7, 2.5, 0.6, 0.5}, ProfileFunction::tent(1.0, 3.0)},
    };
    for (auto& [q, u] : full_cases) {
        auto br = vf::rayleigh_full_radial(q, u, 1e-7);
        ++n;
        if (br.quotient() >= br.rhs_constant - 1e-6 * br.quotient()) ++holds;
    }
    std::vector<std::pair<HardyParams, ProfileFunction>> half_cases = {
        {{1, 0.4, 2.0, 0.1, 0.2}, ProfileFunction::tent(1.0, 2.0)},
        {{1, 0.4, 2.0, 0.1, 0.2}, ProfileFunction::smooth_bump(1.0, 2.0)},
        {{1, 0.5, 2.0, 0.2, -0.3}, ProfileFunction::tent(1.0, 2.0)},
        {{3, 0.6, 2.0, 0.2, -0.4}, ProfileFunction::smooth_bump(0.5, 2.0)},
        {{1, 0.7, 3.0, 0.5, 0.1}, ProfileFunction::tent(1.0, 2.0)},
        {{2, 0.5, 1.5, 0.2, 0.2}, ProfileFunction::smooth_bump(1.0, 2.0)},
        {{2, 0.35, 2.0, -0.6, 0.35}, ProfileFunction::truncated_power(0.3, 0.5, 2.0)},
    };
    for (auto& [q, u] : half_cases) {
        auto br = vf::rayleigh_half_profile(q, u, 1e-7);
        ++n;
        if (br.quotient() >= br.rhs_constant - 1e-6 * br.quotient()) ++holds;
    }
    std::vector<std::pair<HardyParams, ProfileFunction>> interval_cases = {
        {{1, 0.8, 2.0, -0.2, -0.3}, ProfileFunction::smooth_bump(0.375, 0.625)},
        {{1, 0.8, 2.0, -0.2, -0.3}, ProfileFunction::smooth_bump(0.2, 0.45)},
        {{1, 0.9, 2.0, -0.5, -0.25}, ProfileFunction::tent(0.3, 0.7)},
        {{1, 0.85, 3.0, -0.3, -0.4}, ProfileFunction::tent(0.4, 0.8)},
        {{1, 0.95, 2.0, -0.1, -0.2}, ProfileFunction::smooth_bump(0.3, 0.7)},
    };
    for (auto& [q, u] : interval_cases) {
        auto br = vf::interval_inequality(u, q, 1e-7);
        ++n;
        if (br.quotient() >= br.rhs_constant - 1e-6 * br.quotient()) ++holds;
    }

    // sharpness: near-optimal quotients non-increasing, final gap <= 5%
    bool sharp_ok = true;
    std::string sharp_note;
    const std::vector<double> deltas{0.4, 0.2, 0.1, 0.05, 0.02, 0.01};
    for (auto [regime, q] : std::vector<std::pair<Regime, HardyParams>>{
             {Regime::full, {1, 0.3, 2.0, 0.0, 0.0}},
             {Regime::half, {1, 0.5, 2.0, 0.2, -0.3}}}) {
        auto quots = vf::near_optimal_quotients(q, regime, deltas, 1e-6);
        const double constant = (regime == Regime::half)
                                    ? cs::constant_D_closed_p2(q).constant
                                    : cs::constant_C_closed_p2(q).constant;
        for (std::size_t i = 0; i + 1 < quots.size(); ++i)
            if (quots[i + 1].second > quots[i].second * (1.0 + 1e-9)) sharp_ok = false;
        const double gap = quots.back().second / constant - 1.0;
        if (!(gap >= -1e-9 && gap <= 0.05)) sharp_ok = false;
        sharp_note += std::string(regime == Regime::half ? " half" : " full") + " gap " +
                      fmt(gap);
    }
    report(6, n >= 20 && holds == n && sharp_ok,
           "quotient >= constant on " + std::to_string(holds) + "/" + std::to_string(n) +
               " cases; sharpness" + sharp_note);
}

// 7. ground-state identity residuals at p = 2
void criterion_7() {
    int n = 0, ok = 0;
    double worst = 0.0;
    std::vector<std::tuple<HardyParams, ProfileFunction, Regime>> cases = {
        {{1, 0.4, 2.0, 0.1, 0.2}, ProfileFunction::smooth_bump(1.0, 2.0), Regime::full},
        {{1, 0.4, 2.0, 0.1, 0.2}, ProfileFunction::tent(1.0, 2.0), Regime::full},
        {{1, 0.4, 2.0, 0.1, 0.2}, ProfileFunction::truncated_power(-0.35, 0.5, 2.0),
         Regime::full},
        {{2, 0.3, 2.0, 0.1, 0.1}, ProfileFunction::smooth_bump(1.0, 2.0), Regime::full},
        {{3, 0.5, 2.0, 0.5, -0.3}, ProfileFunction::smooth_bump(1.0, 2.0), Regime::full},
        {{1, 0.25, 2.0, -0.2, 0.3}, ProfileFunction::tent(1.0, 2.0), Regime::full},
        {{1, 0.4, 2.0, 0.1, 0.2}, ProfileFunction::smooth_bump(1.0, 2.0), Regime::half},
        {{1, 0.5, 2.0, 0.2, -0.3}, ProfileFunction::smooth_bump(1.0, 2.0), Regime::half},
        {{2, 0.6, 2.0, 0.3, 0.2}, ProfileFunction::tent(1.0, 2.0), Regime::half},
        {{3, 0.3, 2.0, -0.5, 0.15}, ProfileFunction::smooth_bump(1.0, 2.0), Regime::half},
    };
    for (auto& [q, u, regime] : cases) {
        const double resid = vf::ground_state_identity_p2(q, u, regime, 1e-9);
        ++n;
        worst = std::max(worst, resid);
        if (resid <= 1e-6) ++ok;
    }
    report(7, n >= 10 && ok == n,
           "identity residual on " + std::to_string(ok) + "/" + std::to_string(n) +
               " cases, worst " + fmt(worst));
}

// 8. radial reduction vs 10^7-sample Monte Carlo on a truncated d = 2 case
void criterion_8() {
    HardyParams q{2, 0.3, 2.0, 0.1, 0.2};
    auto u = ProfileFunction::smooth_bump(1.0, 2.0);
    const double reduced = vf::radial_seminorm_truncated(q, u, 3.0, 1e-8);
    auto [mc, se] = vf::monte_carlo_full_2d(q, u, 3.0, 10000000, 20260810);
    const double sigmas = std::abs(mc - reduced) / se;
    report(8, sigmas <= 3.0,
           "reduced " + fmt(reduced) + " vs MC " + fmt(mc) + " +- " + fmt(se) + " (" +
               fmt(sigmas) + " sigma)");
}

// 9. geometry: half-space cancellation; m_a <= d_Omega on ball and box
void criterion_9() {
    using geo::ConvexBody;
    using geo::Point;
    double worst_half = 0.0;
    auto half = ConvexBody::half_space(3);
    for (double h : {0.5, 1.0, 2.0})
        for (double a : {0.5, 1.2})
            worst_half = std::max(
                worst_half,
                std::abs(geo::pseudo_distance_m(half, Point{{0.3, -0.4, h}}, a, 1e-10) - h) / h);
    std::mt19937_64 rng(42);
    std::uniform_real_distribution<double> unif(-1.0, 1.0);
    auto ball = ConvexBody::ball(3, 1.0);
    auto box = ConvexBody::box(3, Point{{-1.0, -0.7, -0.5}}, Point{{0.9, 1.1, 0.6}});
    int n_ok = 0, n = 0;
    for (const auto* body : {&ball, &box}) {
        int done = 0;
        while (done < 50) {
            Point x{{unif(rng), unif(rng), unif(rng)}};
            if (!body->contains(x) || body->dist_boundary(x) < 1e-3) continue;
            ++done;
            ++n;
            const double m = geo::pseudo_distance_m(*body, x, 1.2, 1e-8);
            if (m <= body->dist_boundary(x) + 1e-8) ++n_ok;
        }
    }
    report(9, worst_half <= 1e-8 && n_ok == n && n == 100,
           "half-space m_a = x_d to " + fmt(worst_half) + "; m_a <= dist at " +
               std::to_string(n_ok) + "/" + std::to_string(n) + " points");
}

// 10. prefactor identity
void criterion_10() {
    double worst = 0.0;
    for (int d : {2, 3})
        for (double sp : {0.5, 1.2})
            worst = std::max(worst, rel(geo::sphere_weight_integral(d, sp, 1e-11),
                                        geo::sphere_weight_closed(d, sp)));
    report(10, worst <= 1e-8, "sphere weight integral vs Gamma closed form, max rel " + fmt(worst));
}

}  // namespace

int main() {
    criterion_1();
    criterion_2();
    criterion_3();
    criterion_4();
    criterion_5();
    criterion_6();
    criterion_7();
    criterion_8();
    criterion_9();
    criterion_10();
    if (g_failures == 0)
        std::printf("acceptance: all criteria PASS\n");
    else
        std::printf("acceptance: %d criterion(s) FAILED\n", g_failures);
    return g_failures == 0 ? 0 : 1;
}
