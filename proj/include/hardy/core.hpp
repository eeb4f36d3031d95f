#pragma once

#include <cmath>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace hardy {

/// Result of any numeric quadrature or series evaluation.
struct QuadResult {
    double value = 0.0;
    double abs_err = 0.0;   ///< estimated absolute error bound
    long n_evals = 0;       ///< integrand / term evaluations

    bool within(double tol) const {
        return std::isfinite(value) && abs_err <= std::max(tol, tol * std::abs(value));
    }
};

enum class Regime {
    full,            ///< R^d \ {0}, weights |x|^{-a}|y|^{-b}, sp+a+b < d
    full_punctured,  ///< same but sp+a+b > d (test functions supported away from 0)
    half,            ///< half-space, weights x_d^a y_d^b
    interval         ///< open interval, distance-to-boundary weights
};

enum class Method { integral, closed_form, limit_s0 };

inline const char* to_string(Regime r) {
    switch (r) {
        case Regime::full: return "full";
        case Regime::full_punctured: return "full-punctured";
        case Regime::half: return "half";
        case Regime::interval: return "interval";
    }
    return "?";
}

inline const char* to_string(Method m) {
    switch (m) {
        case Method::integral: return "integral";
        case Method::closed_form: return "closed-form";
        case Method::limit_s0: return "limit-s0";
    }
    return "?";
}

/// Parameter tuple (d, s, p, alpha, beta). The derived exponents gamma_full and
/// gamma_half always recompute from the stored fields.
struct HardyParams {
    int d = 1;
    double s = 0.5;
    double p = 2.0;
    double alpha = 0.0;
    double beta = 0.0;

    double sp() const { return s * p; }
    // grouped so that the exact zero on the excluded hyperplanes is reproducible:
    // validate() tests these very expressions against zero
    double gamma_full() const { return ((d - (alpha + beta)) - sp()) / p; }
    double gamma_half() const { return ((1.0 + (alpha + beta)) - sp()) / p; }
};

struct Violation {
    std::string condition;
};

struct ConstantReport {
    HardyParams params;
    double constant = 0.0;
    Method method = Method::integral;
    std::optional<QuadResult> quad;
};

/// Thrown when parameters fail the admissibility hypotheses of the requested regime.
class validation_error : public std::runtime_error {
  public:
    explicit validation_error(const std::string& what) : std::runtime_error(what) {}
};

/// Thrown when a quadrature cannot reach its accepted tolerance.
class quadrature_error : public std::runtime_error {
  public:
    explicit quadrature_error(const std::string& what) : std::runtime_error(what) {}
};

namespace tol {
// Cross-method comparison tolerances (relative).
inline constexpr double closed_vs_quad = 1e-8;
inline constexpr double near_half = 1e-4;        // s within 1e-4 of 1/2 uses the cot branch
// Quadrature targets for the constants: aim for 1e-10, accept 1e-8.
inline constexpr double quad_target = 1e-10;
inline constexpr double quad_accept = 1e-8;
}  // namespace tol

/// Surface measure of the unit sphere S^{d-1}; |S^0| = 2 (counting measure).
inline double sphere_area(int d) {
    return 2.0 * std::pow(M_PI, 0.5 * d) / std::tgamma(0.5 * d);
}

namespace detail {

inline bool open_interval(double x, double lo, double hi) { return x > lo && x < hi; }

inline void check_range(std::vector<Violation>& v, const char* name, double x, double lo,
                        double hi) {
    if (!open_interval(x, lo, hi)) {
        v.push_back({std::string(name) + " outside (" + std::to_string(lo) + ", " +
                     std::to_string(hi) + ")"});
    }
}

}  // namespace detail

/// Admissibility check for the given regime. Empty result iff the hypotheses of the
/// corresponding inequality hold; each entry names the failing condition. s == 0 is a
/// distinct regime branch (the zero-order kernel) with its own weight ranges.
inline std::vector<Violation> validate(const HardyParams& q, Regime regime) {
    std::vector<Violation> v;
    if (q.d < 1) v.push_back({"d < 1"});
    if (!(q.p >= 1.0) || !std::isfinite(q.p)) v.push_back({"p < 1"});
    if (!(q.s >= 0.0 && q.s < 1.0)) v.push_back({"s outside [0, 1)"});
    if (!std::isfinite(q.alpha) || !std::isfinite(q.beta)) v.push_back({"weight exponent not finite"});
    if (!v.empty()) return v;

    const double sp = q.sp();
    const double sum = q.alpha + q.beta;
    switch (regime) {
        case Regime::full:
        case Regime::full_punctured: {
            const double lo = (q.s == 0.0) ? 0.0 : -sp;
            detail::check_range(v, "alpha", q.alpha, lo, q.d);
            detail::check_range(v, "beta", q.beta, lo, q.d);
            detail::check_range(v, "alpha+beta", sum, lo, q.d);
            if (q.s > 0.0) {
                const double gf = q.gamma_full();
                if (gf == 0.0)
                    v.push_back({"sp+alpha+beta = d (gamma_full = 0, excluded hyperplane)"});
                else if (regime == Regime::full && gf < 0.0)
                    v.push_back({"sp+alpha+beta > d requires the full-punctured regime"});
                else if (regime == Regime::full_punctured && gf > 0.0)
                    v.push_back({"sp+alpha+beta < d: use the full regime"});
            }
            break;
        }
        case Regime::half: {
            const double hi = (q.s == 0.0) ? 0.0 : sp;
            detail::check_range(v, "alpha", q.alpha, -1.0, hi);
            detail::check_range(v, "beta", q.beta, -1.0, hi);
            detail::check_range(v, "alpha+beta", sum, -1.0, hi);
            if (q.s > 0.0 && q.gamma_half() == 0.0)
                v.push_back({"1+alpha+beta = sp (gamma_half = 0, excluded hyperplane)"});
            break;
        }
        case Regime::interval: {
            detail::check_range(v, "alpha", q.alpha, -1.0, sp);
            detail::check_range(v, "beta", q.beta, -1.0, sp);
            detail::check_range(v, "alpha+beta", sum, -1.0, sp);
            if (!(sp > 1.0 + sum)) v.push_back({"sp <= 1+alpha+beta"});
            break;
        }
    }
    return v;
}

inline void require_admissible(const HardyParams& q, Regime regime, const char* where) {
    auto v = validate(q, regime);
    if (!v.empty()) {
        std::string msg = std::string(where) + ": inadmissible parameters:";
        for (const auto& x : v) msg += " [" + x.condition + "]";
        throw validation_error(msg);
    }
}

}  // namespace hardy
