#include "catch2/catch_amalgamated.hpp"

#include <cmath>
#include <random>

#include "hardy/geometry.hpp"

using namespace hardy;
namespace geo = hardy::geometry;
using geo::ConvexBody;
using geo::Point;

TEST_CASE("ray distances: analytic cases") {
    auto ball = ConvexBody::ball(3, 1.0);
    CHECK(ball.ray_distance(Point{{0, 0, 0}}, Point{{0, 0, 1}}) == Catch::Approx(1.0));
    // off-centre point along the axis: min of the two exits
    CHECK(ball.ray_distance(Point{{0, 0, 0.5}}, Point{{0, 0, 1}}) == Catch::Approx(0.5));
    CHECK(ball.ray_distance(Point{{0, 0, 0.5}}, Point{{1, 0, 0}}) ==
          Catch::Approx(std::sqrt(1.0 - 0.25)));

    auto half = ConvexBody::half_space(3);
    CHECK(half.ray_distance(Point{{0, 0, 2.0}}, Point{{0, 0, 1}}) == Catch::Approx(2.0));
    CHECK(std::isinf(half.ray_distance(Point{{0, 0, 2.0}}, Point{{1, 0, 0}})));

    auto box = ConvexBody::box(3, Point{{-1, -1, -1}}, Point{{1, 1, 1}});
    CHECK(box.ray_distance(Point{{0, 0, 0}}, Point{{1, 0, 0}}) == Catch::Approx(1.0));
    CHECK(box.dist_boundary(Point{{0.5, 0, 0}}) == Catch::Approx(0.5));
}

TEST_CASE("sphere_weight_integral matches the Gamma closed form") {
    for (int d : {2, 3})
        for (double a : {0.5, 1.0, 1.2}) {
            const double quad = geo::sphere_weight_integral(d, a, 1e-11);
            const double closed = geo::sphere_weight_closed(d, a);
            CAPTURE(d, a);
            CHECK(std::abs(quad - closed) <= 1e-8 * closed);
        }
    CHECK(geo::sphere_weight_integral(1, 0.7) == Catch::Approx(2.0));
    // int_{S^2} |w_3| dw = 2 pi
    CHECK(geo::sphere_weight_integral(3, 1.0) == Catch::Approx(2.0 * M_PI).epsilon(1e-10));
}

TEST_CASE("pseudo-distance on the half-space: exact cancellation to x_d") {
    auto half = ConvexBody::half_space(3);
    for (double h : {0.5, 1.0, 2.0})
        for (double a : {0.5, 1.0, 1.2}) {
            const double m = geo::pseudo_distance_m(half, Point{{0.3, -0.2, h}}, a, 1e-10);
            CAPTURE(h, a);
            CHECK(std::abs(m - h) <= 1e-8 * h);
        }
    auto half2 = ConvexBody::half_space(2);
    CHECK(geo::pseudo_distance_m(half2, Point{{0.4, 1.5, 0.0}}, 0.8, 1e-10) ==
          Catch::Approx(1.5).epsilon(1e-8));
}

TEST_CASE("pseudo-distance at the ball centre") {
    auto ball = ConvexBody::ball(3, 1.0);
    // all rays exit at distance 1: m_a = (int |w_d|^a / |S^2|)^{1/a}
    const double m1 = geo::pseudo_distance_m(ball, Point{{0, 0, 0}}, 1.0, 1e-10);
    CHECK(m1 == Catch::Approx(0.5).epsilon(1e-8));
    CHECK(m1 <= ball.dist_boundary(Point{{0, 0, 0}}));
}

TEST_CASE("pseudo-distance is dominated by the boundary distance on convex bodies") {
    std::mt19937_64 rng(314159);
    std::uniform_real_distribution<double> unif(-1.0, 1.0);
    auto ball = ConvexBody::ball(3, 1.0);
    auto box = ConvexBody::box(3, Point{{-1.0, -0.7, -0.5}}, Point{{0.9, 1.1, 0.6}});
    int n_ball = 0, n_box = 0;
    while (n_ball + n_box < 60) {
        Point x{{unif(rng), unif(rng), unif(rng)}};
        const bool use_ball = (n_ball <= n_box);
        const ConvexBody& body = use_ball ? ball : box;
        if (!body.contains(x)) continue;
        if (body.dist_boundary(x) < 1e-3) continue;
        (use_ball ? n_ball : n_box) += 1;
        const double m = geo::pseudo_distance_m(body, x, 1.2, 1e-8);
        CAPTURE(use_ball, x[0], x[1], x[2]);
        CHECK(m <= body.dist_boundary(x) + 1e-8);
    }
}

TEST_CASE("pseudo-distance contract violations") {
    auto ball = ConvexBody::ball(3, 1.0);
    CHECK_THROWS_AS(geo::pseudo_distance_m(ball, Point{{2, 0, 0}}, 1.0), std::invalid_argument);
    CHECK_THROWS_AS(geo::pseudo_distance_m(ball, Point{{0, 0, 0}}, -1.0), std::invalid_argument);
}
