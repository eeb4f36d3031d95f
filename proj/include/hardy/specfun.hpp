#pragma once

#include <cmath>
#include <cstdlib>
#include <limits>
#include <stdexcept>

#include "hardy/core.hpp"

// Real special functions used by every closed form in the library: Gamma with the
// entire-1/Gamma convention of the constants (zeroes at 0, -1, -2, ...), digamma,
// the extended Beta B(a,b) = Gamma(a) Gamma(b) (1/Gamma)(a+b), and the Gauss
// hypergeometric 2F1 on [0,1) including the c-a-b integer logarithmic cases.

namespace hardy::specfun {

inline constexpr double euler_gamma = 0.57721566490153286060651209008240243;

/// Value plus a pole flag. Poles are reported, not thrown, so that callers can
/// cancel them through the entire reciprocal Gamma.
struct SpecialValue {
    double value = 0.0;
    bool is_pole = false;
};

inline bool is_nonpositive_integer(double x) {
    return x <= 0.0 && x == std::floor(x);
}

/// sin(pi x) with exact argument reduction: exactly 0 at integers.
inline double sin_pi(double x) {
    double r = x - std::round(x);
    double s = std::sin(M_PI * r);
    long long n = static_cast<long long>(std::round(std::fmod(std::round(x), 2.0)));
    return (n == 0) ? s : -s;
}

inline double cos_pi(double x) {
    double r = x - std::round(x);
    double c = std::cos(M_PI * r);
    long long n = static_cast<long long>(std::round(std::fmod(std::round(x), 2.0)));
    return (n == 0) ? c : -c;
}

/// pi * cot(pi x), reduced so that the only poles are at integers.
inline double pi_cot_pi(double x) {
    double r = x - std::round(x);
    return M_PI * std::cos(M_PI * r) / std::sin(M_PI * r);
}

namespace detail {

// Lanczos approximation, g = 7, 9 terms. Relative error ~1e-15 on the positive axis.
inline double lanczos_sum(double x) {
    static const double c[9] = {
        0.99999999999980993,   676.5203681218851,     -1259.1392167224028,
        771.32342877765313,    -176.61502916214059,   12.507343278686905,
        -0.13857109526572012,  9.9843695780195716e-6, 1.5056327351493116e-7};
    double s = c[0];
    for (int i = 1; i < 9; ++i) s += c[i] / (x - 1.0 + i);
    return s;
}

inline double gamma_positive(double x) {
    // x >= 0.5
    const double g = 7.0;
    double t = x + g - 0.5;
    return std::sqrt(2.0 * M_PI) * std::pow(t, x - 0.5) * std::exp(-t) * lanczos_sum(x);
}

}  // namespace detail

/// Euler Gamma. Pole flag at 0, -1, -2, ...
inline SpecialValue gamma(double x) {
    if (std::isnan(x)) return {std::numeric_limits<double>::quiet_NaN(), false};
    if (is_nonpositive_integer(x))
        return {std::numeric_limits<double>::infinity(), true};
    if (x >= 0.5) return {detail::gamma_positive(x), false};
    // reflection: Gamma(x) = pi / (sin(pi x) Gamma(1-x))
    return {M_PI / (sin_pi(x) * detail::gamma_positive(1.0 - x)), false};
}

/// Entire reciprocal Gamma; exactly 0.0 at 0, -1, -2, ...
inline double rec_gamma(double x) {
    if (std::isnan(x)) return std::numeric_limits<double>::quiet_NaN();
    if (x >= 0.5) return 1.0 / detail::gamma_positive(x);
    return sin_pi(x) * detail::gamma_positive(1.0 - x) / M_PI;
}

/// Extended Euler Beta, B(a,b) = Gamma(a) Gamma(b) (1/Gamma)(a+b).
/// Pole flag when a or b is a nonpositive integer.
inline SpecialValue beta_ext(double a, double b) {
    if (is_nonpositive_integer(a) || is_nonpositive_integer(b))
        return {std::numeric_limits<double>::infinity(), true};
    return {gamma(a).value * gamma(b).value * rec_gamma(a + b), false};
}

/// Digamma psi = Gamma'/Gamma. Pole flag at nonpositive integers.
inline SpecialValue digamma(double x) {
    if (std::isnan(x)) return {std::numeric_limits<double>::quiet_NaN(), false};
    if (is_nonpositive_integer(x))
        return {std::numeric_limits<double>::infinity(), true};
    double result = 0.0;
    if (x < 0.5) {
        // psi(x) = psi(1-x) - pi cot(pi x)
        result = -pi_cot_pi(x);
        x = 1.0 - x;
    }
    while (x < 8.0) {
        result -= 1.0 / x;
        x += 1.0;
    }
    // asymptotic series with Bernoulli numbers B2..B14
    const double inv = 1.0 / x, inv2 = inv * inv;
    double series = 0.0;
    static const double bern[7] = {1.0 / 6.0,   -1.0 / 30.0,    1.0 / 42.0, -1.0 / 30.0,
                                   5.0 / 66.0,  -691.0 / 2730.0, 7.0 / 6.0};
    double pw = inv2;
    for (int k = 0; k < 7; ++k) {
        series += bern[k] / (2.0 * (k + 1)) * pw;
        pw *= inv2;
    }
    return {result + std::log(x) - 0.5 * inv - series, false};
}

namespace detail {

constexpr long hyp_max_terms = 200000;
constexpr double d_eps = 2.2204460492503131e-16;

// Direct Gauss series at |z| <= 1/2.
inline QuadResult hyp_series(double a, double b, double c, double z, double tol) {
    double term = 1.0, sum = 1.0, abssum = 1.0;
    long n = 0;
    for (; n < hyp_max_terms; ++n) {
        term *= (a + n) * (b + n) / ((c + n) * (n + 1.0)) * z;
        sum += term;
        abssum += std::abs(term);
        if (std::abs(term) <= 0.25 * tol * std::abs(sum) && n > 2) break;
    }
    double err = d_eps * abssum + std::abs(term);
    return {sum, err, n + 1};
}

// Terminating series when a (or b) is a nonpositive integer.
inline QuadResult hyp_terminating(double a, double b, double c, double z) {
    long m = static_cast<long>(std::llround(-a));
    double term = 1.0, sum = 1.0, abssum = 1.0;
    for (long n = 0; n < m; ++n) {
        term *= (a + n) * (b + n) / ((c + n) * (n + 1.0)) * z;
        sum += term;
        abssum += std::abs(term);
    }
    return {sum, d_eps * abssum, m + 1};
}

// A&S 15.3.6, c-a-b not near an integer; series in w = 1-z.
inline QuadResult hyp_nonint_near1(double a, double b, double c, double w, double tol) {
    const double mt = c - a - b;
    const double g_c = gamma(c).value;
    const double pref1 = g_c * gamma(mt).value * rec_gamma(c - a) * rec_gamma(c - b);
    const double pref2 = g_c * gamma(-mt).value * rec_gamma(a) * rec_gamma(b) * std::pow(w, mt);
    double t1 = 1.0, s1 = 1.0, t2 = 1.0, s2 = 1.0, a1 = 1.0, a2 = 1.0;
    long n = 0;
    for (; n < hyp_max_terms; ++n) {
        t1 *= (a + n) * (b + n) / ((a + b - c + 1.0 + n) * (n + 1.0)) * w;
        t2 *= (c - a + n) * (c - b + n) / ((c - a - b + 1.0 + n) * (n + 1.0)) * w;
        s1 += t1;
        s2 += t2;
        a1 += std::abs(t1);
        a2 += std::abs(t2);
        double rem = std::abs(pref1 * t1) + std::abs(pref2 * t2);
        if (rem <= 0.25 * tol * std::abs(pref1 * s1 + pref2 * s2) && n > 2) break;
    }
    double value = pref1 * s1 + pref2 * s2;
    double err = d_eps * (std::abs(pref1) * a1 + std::abs(pref2) * a2) +
                 std::abs(pref1 * t1) + std::abs(pref2 * t2);
    return {value, err, 2 * (n + 1)};
}

// Logarithmic cases at integer m = a+b-c (A&S 15.3.10 / 15.3.14) and
// integer m = c-a-b (15.3.12). w = 1-z.
inline QuadResult hyp_log_case_ab_minus_c(double a, double b, long m, double w, double tol) {
    // c = a+b-m, m >= 0. 15.3.10 for m == 0, 15.3.14 otherwise.
    const double c = a + b - m;
    const double g_c = gamma(c).value;
    double part1 = 0.0;
    if (m >= 1) {
        double t = 1.0, sum = 0.0;
        for (long n = 0; n < m; ++n) {
            sum += t;
            if (n < m - 1) t *= (a - m + n) * (b - m + n) * w / ((n + 1.0) * (1.0 - m + n));
        }
        part1 = gamma(static_cast<double>(m)).value * g_c * rec_gamma(a) * rec_gamma(b) *
                std::pow(w, static_cast<double>(-m)) * sum;
    }
    const double lw = std::log(w);
    double psi_n1 = digamma(1.0).value;          // psi(n+1)
    double psi_nm1 = digamma(m + 1.0).value;     // psi(n+m+1)
    double psi_an = digamma(a).value;            // psi(a+n)
    double psi_bn = digamma(b).value;            // psi(b+n)
    double fac = 1.0;
    for (long k = 1; k <= m; ++k) fac *= k;
    double t = 1.0 / fac, sum = 0.0, abssum = 0.0, term = 0.0;
    long n = 0;
    for (; n < hyp_max_terms; ++n) {
        term = t * (lw - psi_n1 - psi_nm1 + psi_an + psi_bn);
        sum += term;
        abssum += std::abs(term);
        if (std::abs(term) <= 0.25 * tol * std::max(1.0, std::abs(sum)) && n > 2) break;
        t *= (a + n) * (b + n) * w / ((n + 1.0) * (n + m + 1.0));
        psi_n1 += 1.0 / (n + 1.0);
        psi_nm1 += 1.0 / (n + m + 1.0);
        psi_an += 1.0 / (a + n);
        psi_bn += 1.0 / (b + n);
    }
    const double sign = (m % 2 == 0) ? 1.0 : -1.0;
    double part2 = -sign * g_c * rec_gamma(a - m) * rec_gamma(b - m) * sum;
    double value = part1 + part2;
    double err = d_eps * (std::abs(part1) + std::abs(g_c * rec_gamma(a - m) * rec_gamma(b - m)) * abssum) +
                 std::abs(term);
    return {value, err, n + m + 1};
}

inline QuadResult hyp_log_case_c_minus_ab(double a, double b, long m, double w, double tol) {
    // c = a+b+m, m >= 1 (15.3.12).
    const double c = a + b + m;
    const double g_c = gamma(c).value;
    double t = 1.0, sum1 = 0.0;
    for (long n = 0; n < m; ++n) {
        sum1 += t;
        if (n < m - 1) t *= (a + n) * (b + n) * w / ((n + 1.0) * (1.0 - m + n));
    }
    double part1 =
        gamma(static_cast<double>(m)).value * g_c * rec_gamma(a + m) * rec_gamma(b + m) * sum1;
    const double lw = std::log(w);
    double psi_n1 = digamma(1.0).value;
    double psi_nm1 = digamma(m + 1.0).value;
    double psi_an = digamma(a + m).value;
    double psi_bn = digamma(b + m).value;
    double fac = 1.0;
    for (long k = 1; k <= m; ++k) fac *= k;
    double tt = std::pow(w, static_cast<double>(m)) / fac;
    double sum = 0.0, abssum = 0.0, term = 0.0;
    long n = 0;
    for (; n < hyp_max_terms; ++n) {
        term = tt * (lw - psi_n1 - psi_nm1 + psi_an + psi_bn);
        sum += term;
        abssum += std::abs(term);
        if (std::abs(term) <= 0.25 * tol * std::max(1.0, std::abs(sum)) && n > 2) break;
        tt *= (a + m + n) * (b + m + n) * w / ((n + 1.0) * (n + m + 1.0));
        psi_n1 += 1.0 / (n + 1.0);
        psi_nm1 += 1.0 / (n + m + 1.0);
        psi_an += 1.0 / (a + m + n);
        psi_bn += 1.0 / (b + m + n);
    }
    const double sign = (m % 2 == 0) ? 1.0 : -1.0;
    double part2 = -sign * g_c * rec_gamma(a) * rec_gamma(b) * sum;
    double value = part1 + part2;
    double err = d_eps * (std::abs(part1) + std::abs(g_c * rec_gamma(a) * rec_gamma(b)) * abssum) +
                 std::abs(term);
    return {value, err, n + m + 1};
}

}  // namespace detail

/// Gauss hypergeometric 2F1(a,b;c;z) for z in [0,1), in terms of w = 1-z when z > 1/2
/// so that callers with an exactly known 1-z lose no accuracy. Handles the integer
/// c-a-b logarithmic cases; near-integer cases carry the cancellation in abs_err.
inline QuadResult hyp2f1_w(double a, double b, double c, double z, double w,
                           double tol = 1e-14) {
    if (is_nonpositive_integer(c))
        throw std::invalid_argument("hyp2f1: c is a nonpositive integer");
    // w is authoritative near z = 1 (callers can compute it without cancellation even
    // when z itself rounds to 1)
    if (!(z >= 0.0) || !(w > 0.0 && w <= 1.0))
        throw std::invalid_argument("hyp2f1: z outside [0,1)");
    if (z == 0.0) return {1.0, detail::d_eps, 1};
    if (a == c) return {std::exp(-b * std::log(w)), detail::d_eps * 2, 1};
    if (b == c) return {std::exp(-a * std::log(w)), detail::d_eps * 2, 1};
    const bool a_term = is_nonpositive_integer(a);
    const bool b_term = is_nonpositive_integer(b);
    if (a_term || b_term) {
        return a_term ? detail::hyp_terminating(a, b, c, z) : detail::hyp_terminating(b, a, c, z);
    }
    if (z <= 0.5) return detail::hyp_series(a, b, c, z, tol);
    const double mt = c - a - b;
    const long mr = static_cast<long>(std::llround(mt));
    if (std::abs(mt - mr) < 1e-12) {
        if (mr <= 0) return detail::hyp_log_case_ab_minus_c(a, b, -mr, w, tol);
        return detail::hyp_log_case_c_minus_ab(a, b, mr, w, tol);
    }
    return detail::hyp_nonint_near1(a, b, c, w, tol);
}

inline QuadResult hyp2f1(double a, double b, double c, double z, double tol = 1e-14) {
    return hyp2f1_w(a, b, c, z, 1.0 - z, tol);
}

}  // namespace hardy::specfun
