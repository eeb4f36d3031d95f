#pragma once

#include <cmath>
#include <limits>
#include <stdexcept>
#include <utility>
#include <vector>

namespace hardy::profiles {

enum class ProfileKind { truncated_power, tent, smooth_bump, near_optimal, zero };

/// A 1-D trial profile on (0, infinity), evaluated in log coordinates: logv(x) is the
/// logarithm of the profile value at t = e^x (-inf where the profile vanishes). The
/// near-optimal family spans supports like [e^{-300}, e^{300}], which is why values
/// are never materialised in linear scale.
class ProfileFunction {
  public:
    static ProfileFunction tent(double a, double b) {
        check_support(a, b);
        ProfileFunction f(ProfileKind::tent, std::log(a), std::log(b));
        f.lin_a_ = a;
        f.lin_b_ = b;
        f.breaks_ = {std::log(0.5 * (a + b))};
        return f;
    }

    static ProfileFunction smooth_bump(double a, double b) {
        check_support(a, b);
        ProfileFunction f(ProfileKind::smooth_bump, std::log(a), std::log(b));
        f.lin_a_ = a;
        f.lin_b_ = b;
        return f;
    }

    /// t^exponent on the middle of [a,b] (log-scale), linear ramps to 0 at a and b.
    static ProfileFunction truncated_power(double exponent, double a, double b,
                                           double ramp_frac = 0.15) {
        check_support(a, b);
        if (!(ramp_frac > 0.0 && ramp_frac < 0.5))
            throw std::invalid_argument("truncated_power: ramp_frac outside (0, 1/2)");
        ProfileFunction f(ProfileKind::truncated_power, std::log(a), std::log(b));
        f.lin_a_ = a;
        f.lin_b_ = b;
        f.expo_ = exponent;
        const double la = f.la_, lb = f.lb_;
        f.core_lo_ = la + ramp_frac * (lb - la);
        f.core_hi_ = lb - ramp_frac * (lb - la);
        f.breaks_ = {f.core_lo_, f.core_hi_};
        return f;
    }

    /// The sharpness family around the ground state t^{-gamma}: t^{-gamma+delta} for
    /// t <= 1, t^{-gamma-delta} for t >= 1, core |ln t| <= L = Lambda/delta, tapering
    /// linearly (in value, against ln t) to 0 over the next W log-units.
    static ProfileFunction near_optimal(double gamma, double delta, double Lambda = 3.0,
                                        double W = 3.0) {
        if (!(delta > 0.0)) throw std::invalid_argument("near_optimal: delta must be positive");
        if (!(Lambda > 0.0 && W > 0.0))
            throw std::invalid_argument("near_optimal: Lambda, W must be positive");
        const double L = Lambda / delta;
        ProfileFunction f(ProfileKind::near_optimal, -(L + W), L + W);
        f.gamma_ = gamma;
        f.delta_ = delta;
        f.core_lo_ = -L;
        f.core_hi_ = L;
        f.breaks_ = {-L, 0.0, L};
        return f;
    }

    static ProfileFunction zero() {
        ProfileFunction f(ProfileKind::zero, 0.0, 1.0);
        return f;
    }

    ProfileKind kind() const { return kind_; }
    bool is_zero() const { return kind_ == ProfileKind::zero; }

    /// Same profile multiplied by a positive scalar.
    ProfileFunction scaled(double amplitude) const {
        if (!(amplitude > 0.0)) throw std::invalid_argument("scaled: amplitude must be positive");
        ProfileFunction f = *this;
        f.log_amp_ += std::log(amplitude);
        return f;
    }

    /// Support bounds in log coordinates.
    std::pair<double, double> log_support() const { return {la_, lb_}; }
    /// Interior points (log coordinates) where smoothness is lost.
    const std::vector<double>& log_breakpoints() const { return breaks_; }

    /// log of the value at t = e^x.
    double logv(double x) const {
        const double base = logv_base(x);
        return std::isfinite(base) ? base + log_amp_ : base;
    }
  private:
    double logv_base(double x) const {
        constexpr double ninf = -std::numeric_limits<double>::infinity();
        if (kind_ == ProfileKind::zero) return ninf;
        if (x <= la_ || x >= lb_) return ninf;
        switch (kind_) {
            case ProfileKind::tent: {
                const double t = std::exp(x);
                const double v = 1.0 - std::abs(2.0 * t - (lin_a_ + lin_b_)) / (lin_b_ - lin_a_);
                return v > 0.0 ? std::log(v) : ninf;
            }
            case ProfileKind::smooth_bump: {
                const double z = (2.0 * x - (la_ + lb_)) / (lb_ - la_);
                return -1.0 / (1.0 - z * z);  // log of exp(-1/(1-z^2)), exact
            }
            case ProfileKind::truncated_power: {
                if (x <= core_lo_)
                    return expo_ * core_lo_ + std::log((x - la_) / (core_lo_ - la_));
                if (x >= core_hi_)
                    return expo_ * core_hi_ + std::log((lb_ - x) / (lb_ - core_hi_));
                return expo_ * x;
            }
            case ProfileKind::near_optimal: {
                const double ax = std::abs(x);
                if (ax <= core_hi_) return -gamma_ * x - delta_ * ax;
                const double edge = (x > 0.0 ? -gamma_ * core_hi_ : gamma_ * core_hi_) -
                                    delta_ * core_hi_;
                return edge + std::log((lb_ - ax) / (lb_ - core_hi_));
            }
            default: return ninf;
        }
    }

  public:
    /// Derivative of logv with respect to the log coordinate (one-sided at joints).
    /// Lets callers form |u(x) - u(y)| without cancellation near the diagonal.
    double dlogv(double x) const {
        if (kind_ == ProfileKind::zero) return 0.0;
        if (x <= la_ || x >= lb_) return 0.0;
        switch (kind_) {
            case ProfileKind::tent: {
                const double t = std::exp(x);
                const double v = 1.0 - std::abs(2.0 * t - (lin_a_ + lin_b_)) / (lin_b_ - lin_a_);
                if (v <= 0.0) return 0.0;
                const double slope = (2.0 * t < lin_a_ + lin_b_) ? 2.0 : -2.0;
                return t * slope / ((lin_b_ - lin_a_) * v);
            }
            case ProfileKind::smooth_bump: {
                const double z = (2.0 * x - (la_ + lb_)) / (lb_ - la_);
                const double q = 1.0 - z * z;
                return -2.0 * z / (q * q) * (2.0 / (lb_ - la_));
            }
            case ProfileKind::truncated_power: {
                if (x <= core_lo_) return 1.0 / (x - la_);
                if (x >= core_hi_) return -1.0 / (lb_ - x);
                return expo_;
            }
            case ProfileKind::near_optimal: {
                const double ax = std::abs(x);
                const double sgn = x >= 0.0 ? 1.0 : -1.0;
                if (ax <= core_hi_) return -gamma_ - delta_ * sgn;
                return -sgn / (lb_ - ax);
            }
            default: return 0.0;
        }
    }

    /// Value at linear coordinate t (interval-regime use).
    double value(double t) const {
        if (!(t > 0.0)) return 0.0;
        const double lv = logv(std::log(t));
        return std::isfinite(lv) ? std::exp(lv) : 0.0;
    }

    /// d(value)/dt at linear coordinate t.
    double dvalue(double t) const {
        if (!(t > 0.0)) return 0.0;
        const double v = value(t);
        return v == 0.0 ? 0.0 : v * dlogv(std::log(t)) / t;
    }

    /// |u(x) - u(y)| in linear coordinates with dxy = |x-y| exact; uses the midpoint
    /// derivative when the two points are close and no joint lies between them.
    double diff_linear(double x, double y, double dxy) const {
        const double lo = std::min(x, y), hi = std::max(x, y);
        if (dxy < 1e-6 * hi && !breakpoint_between(std::log(lo), std::log(hi)))
            return std::abs(dvalue(0.5 * (x + y))) * dxy;
        return std::abs(value(x) - value(y));
    }

    bool breakpoint_between(double xlo, double xhi) const {
        for (double b : breaks_)
            if (b > xlo && b < xhi) return true;
        return false;
    }

  private:
    ProfileFunction(ProfileKind k, double la, double lb) : kind_(k), la_(la), lb_(lb) {}

    static void check_support(double a, double b) {
        if (!(a > 0.0) || !(b > a))
            throw std::invalid_argument("profile: support must satisfy 0 < a < b");
    }

    ProfileKind kind_;
    double la_, lb_;           // log support
    double lin_a_ = 0.0, lin_b_ = 0.0;
    double expo_ = 0.0;        // truncated_power exponent
    double gamma_ = 0.0, delta_ = 0.0;
    double log_amp_ = 0.0;
    double core_lo_ = 0.0, core_hi_ = 0.0;
    std::vector<double> breaks_{};
};

}  // namespace hardy::profiles
