#pragma once

#include <array>
#include <cmath>
#include <functional>
#include <limits>
#include <stdexcept>

#include "hardy/core.hpp"
#include "hardy/quadrature.hpp"
#include "hardy/specfun.hpp"

// Convex bodies (half-space, ball, axis-aligned box), ray distances to the boundary,
// spherical quadrature, and the direction-averaged pseudodistance
//   m_a(x)^a = [int_{S^{d-1}} |w_d|^a dw] / [int_{S^{d-1}} d_{w,Omega}(x)^{-a} dw],
// which is dominated by the boundary distance on convex bodies.

namespace hardy::geometry {

struct Point {
    std::array<double, 3> c{0.0, 0.0, 0.0};
    double operator[](int i) const { return c[static_cast<std::size_t>(i)]; }
    double& operator[](int i) { return c[static_cast<std::size_t>(i)]; }
};

class ConvexBody {
  public:
    enum class Shape { half_space, ball, box };

    /// x_d > 0.
    static ConvexBody half_space(int d) {
        ConvexBody b;
        b.shape_ = Shape::half_space;
        b.d_ = d;
        return b;
    }

    static ConvexBody ball(int d, double radius) {
        if (!(radius > 0.0)) throw std::invalid_argument("ball: radius must be positive");
        ConvexBody b;
        b.shape_ = Shape::ball;
        b.d_ = d;
        b.radius_ = radius;
        return b;
    }

    static ConvexBody box(int d, const Point& lo, const Point& hi) {
        ConvexBody b;
        b.shape_ = Shape::box;
        b.d_ = d;
        b.lo_ = lo;
        b.hi_ = hi;
        for (int i = 0; i < d; ++i)
            if (!(lo[i] < hi[i])) throw std::invalid_argument("box: lo must be below hi");
        return b;
    }

    Shape shape() const { return shape_; }
    int dim() const { return d_; }
    double radius() const { return radius_; }

    bool contains(const Point& x) const {
        switch (shape_) {
            case Shape::half_space: return x[d_ - 1] > 0.0;
            case Shape::ball: {
                double n2 = 0.0;
                for (int i = 0; i < d_; ++i) n2 += x[i] * x[i];
                return n2 < radius_ * radius_;
            }
            case Shape::box:
                for (int i = 0; i < d_; ++i)
                    if (!(x[i] > lo_[i] && x[i] < hi_[i])) return false;
                return true;
        }
        return false;
    }

    double dist_boundary(const Point& x) const {
        switch (shape_) {
            case Shape::half_space: return x[d_ - 1];
            case Shape::ball: {
                double n2 = 0.0;
                for (int i = 0; i < d_; ++i) n2 += x[i] * x[i];
                return radius_ - std::sqrt(n2);
            }
            case Shape::box: {
                double m = std::numeric_limits<double>::infinity();
                for (int i = 0; i < d_; ++i) m = std::min({m, x[i] - lo_[i], hi_[i] - x[i]});
                return m;
            }
        }
        return 0.0;
    }

    /// min{|t| : x + t w not in Omega}: the shorter of the two exit distances along
    /// the line through x with direction w. Infinite when the line never exits.
    double ray_distance(const Point& x, const Point& w) const {
        return std::min(exit_distance(x, w), exit_distance(x, Point{{-w[0], -w[1], -w[2]}}));
    }

  private:
    double exit_distance(const Point& x, const Point& w) const {
        constexpr double inf = std::numeric_limits<double>::infinity();
        switch (shape_) {
            case Shape::half_space: {
                const double wd = w[d_ - 1];
                if (wd >= 0.0) return inf;
                return -x[d_ - 1] / wd;
            }
            case Shape::ball: {
                double c = 0.0, n2 = 0.0;
                for (int i = 0; i < d_; ++i) {
                    c += x[i] * w[i];
                    n2 += x[i] * x[i];
                }
                const double disc = c * c + radius_ * radius_ - n2;
                return -c + std::sqrt(std::max(disc, 0.0));
            }
            case Shape::box: {
                double t = inf;
                for (int i = 0; i < d_; ++i) {
                    if (w[i] > 0.0)
                        t = std::min(t, (hi_[i] - x[i]) / w[i]);
                    else if (w[i] < 0.0)
                        t = std::min(t, (lo_[i] - x[i]) / w[i]);
                }
                return t;
            }
        }
        return inf;
    }

    Shape shape_ = Shape::half_space;
    int d_ = 3;
    double radius_ = 1.0;
    Point lo_{}, hi_{};
};

/// Integral of f over the unit sphere S^{d-1}, d in {1,2,3}. The polar variable is
/// integrated by tanh-sinh panels split at the equator (integrands of the form
/// |w_d|^a kink there); the azimuth (d = 3) by the periodic trapezoid rule. d = 1
/// is the exact two-point sum.
inline double sphere_integral(int d, const std::function<double(const Point&)>& f,
                              double tol = 1e-10) {
    if (d == 1) {
        return f(Point{{1.0, 0.0, 0.0}}) + f(Point{{-1.0, 0.0, 0.0}});
    }
    if (d == 2) {
        // quadrant panels: components vanish at multiples of pi/2
        double total = 0.0;
        for (int k = 0; k < 4; ++k) {
            quadrature::Integrand1D seg(
                [&](double phi, double, double) {
                    return f(Point{{std::cos(phi), std::sin(phi), 0.0}});
                },
                0.5 * M_PI * k, 0.5 * M_PI * (k + 1), 0.0, 0.0);
            total += quadrature::integrate_1d(seg, tol, 10).value;
        }
        return total;
    }
    if (d == 3) {
        // int_{S^2} f = int_{-1}^{1} dt int_0^{2pi} f(sqrt(1-t^2) cos, sqrt(1-t^2) sin, t)
        auto azimuth = [&](double t) {
            const double rho = std::sqrt(std::max(1.0 - t * t, 0.0));
            int n = 16;
            double prev = 0.0;
            for (int it = 0; it < 9; ++it, n *= 2) {
                double s = 0.0;
                for (int j = 0; j < n; ++j) {
                    const double phi = 2.0 * M_PI * j / n;
                    s += f(Point{{rho * std::cos(phi), rho * std::sin(phi), t}});
                }
                const double cur = 2.0 * M_PI * s / n;
                if (it > 1 && std::abs(cur - prev) <= tol * std::max(1.0, std::abs(cur)))
                    return cur;
                prev = cur;
            }
            return prev;
        };
        double total = 0.0;
        for (int half = 0; half < 2; ++half) {
            quadrature::Integrand1D seg(
                [&](double t, double, double) { return azimuth(t); },
                half == 0 ? -1.0 : 0.0, half == 0 ? 0.0 : 1.0, 0.0, 0.0);
            total += quadrature::integrate_1d(seg, tol, 8).value;
        }
        return total;
    }
    throw std::invalid_argument("sphere_integral: d must be 1, 2 or 3");
}

/// int_{S^{d-1}} |w_d|^a dw by quadrature (the closed form is
/// 2 pi^{(d-1)/2} Gamma((1+a)/2) / Gamma((d+a)/2); both routes are exposed).
inline double sphere_weight_integral(int d, double a, double tol = 1e-11) {
    if (d == 1) return 2.0;
    if (d == 2) {
        // 4 int_0^{pi/2} (sin phi)^a dphi, endpoint exponent a at 0
        quadrature::Integrand1D seg(
            [&](double phi, double, double) { return std::pow(std::sin(phi), a); }, 0.0,
            0.5 * M_PI, a, 0.0);
        return 4.0 * quadrature::integrate_1d(seg, tol, 12).value;
    }
    if (d == 3) {
        // 2 pi * 2 int_0^1 t^a dt via tanh-sinh (kept as a quadrature on purpose)
        quadrature::Integrand1D seg([&](double t, double, double) { return std::pow(t, a); },
                                    0.0, 1.0, a, 0.0);
        return 4.0 * M_PI * quadrature::integrate_1d(seg, tol, 12).value;
    }
    throw std::invalid_argument("sphere_weight_integral: d must be 1, 2 or 3");
}

/// Gamma closed form of the same integral (the half-space prefactor identity).
inline double sphere_weight_closed(int d, double a) {
    return 2.0 * std::pow(M_PI, 0.5 * (d - 1)) * specfun::gamma(0.5 * (1.0 + a)).value *
           specfun::rec_gamma(0.5 * (d + a));
}

/// Pseudodistance m_a(x): direction-averaged boundary distance. On the half-space the
/// two spherical integrals cancel analytically and m_a(x) = x_d; on convex bodies
/// m_a(x) <= dist(x, boundary).
inline double pseudo_distance_m(const ConvexBody& body, const Point& x, double a,
                                double tol = 1e-10) {
    if (!(a > 0.0)) throw std::invalid_argument("pseudo_distance_m: a must be positive");
    if (!body.contains(x)) throw std::invalid_argument("pseudo_distance_m: x not interior");
    const int d = body.dim();
    const double num = sphere_weight_integral(d, a, tol);
    const double den = sphere_integral(
        d,
        [&](const Point& w) {
            const double r = body.ray_distance(x, w);
            return std::isfinite(r) ? std::pow(r, -a) : 0.0;
        },
        tol);
    return std::pow(num / den, 1.0 / a);
}

}  // namespace hardy::geometry
