#include <cmath>
#include <numbers>
#include <random>

#include "doctest.h"
#include "symrig/geometry.hpp"
#include "symrig/rng.hpp"
#include "test_helpers.hpp"

using namespace symrig;
using namespace symrig::testing;

namespace {

DirectionVec random_direction(std::mt19937_64& rng) {
    const double angle = 2.0 * std::numbers::pi * uniform_unit(rng);
    return DirectionVec(std::cos(angle), std::sin(angle));
}

}  // namespace

TEST_CASE("vstar on hand-checked inputs") {
    // v = (1,0), R = rotation by pi: v-perp = (0,1), half turn by pi/2 -> (-1,0)
    const DirectionVec a = vstar(DirectionVec(1.0, 0.0), RotationPower{2, 1});
    CHECK(a.x() == doctest::Approx(-1.0));
    CHECK(a.y() == doctest::Approx(0.0).epsilon(1e-12));

    // identity rotation: v* = v-perp
    const DirectionVec b = vstar(DirectionVec(1.0, 0.0), RotationPower{4, 0});
    CHECK(b.x() == doctest::Approx(0.0).epsilon(1e-12));
    CHECK(b.y() == doctest::Approx(1.0));

    // v = (0,1), R = rotation by pi/2: half rotation by pi/4 of (-1,0)
    const DirectionVec c = vstar(DirectionVec(0.0, 1.0), RotationPower{4, 1});
    const double s = std::sqrt(2.0) / 2.0;
    CHECK(c.x() == doctest::Approx(-s));
    CHECK(c.y() == doctest::Approx(-s));
}

TEST_CASE("vstar parity gives the same line") {
    std::mt19937_64 rng(7);
    for (int i = 0; i < 50; ++i) {
        const int k = 2 + static_cast<int>(uniform_int(rng, 0, 4));
        const int gamma = static_cast<int>(uniform_int(rng, 0, k - 1));
        const DirectionVec v = random_direction(rng);
        const Vec2 canonical = vstar(v, RotationPower{k, gamma}).vec();
        // the other square root rotates by pi*(gamma + k)/k, negating the result
        const Vec2 other =
            rotation_matrix(std::numbers::pi * (gamma + k) / k).apply(perp(v.vec()));
        CHECK(parallel_lines(canonical, other));
    }
}

TEST_CASE("rotation locus solves (R - I) p = lambda v*") {
    const DirectionVec v = solve_rotation_locus(RotationPower{2, 1}, DirectionVec(0.0, 1.0));
    // direct solve: (R - I) p = (0,1) with R - I = -2I gives p on span (0,1)
    CHECK(parallel_lines(v.vec(), {0.0, 1.0}));

    CHECK_THROWS_AS(solve_rotation_locus(RotationPower{3, 0}, DirectionVec(1.0, 0.0)),
                    std::invalid_argument);

    // flipping the square-root branch negates v*, the locus line is unchanged
    {
        const RotationPower r{5, 2};
        const DirectionVec vs(0.3, -0.8);
        const DirectionVec flipped(-vs.x(), -vs.y());
        CHECK(parallel_lines(solve_rotation_locus(r, vs).vec(),
                             solve_rotation_locus(r, flipped).vec()));
    }

    std::mt19937_64 rng(11);
    for (int i = 0; i < 200; ++i) {
        const int k = 2 + static_cast<int>(uniform_int(rng, 0, 5));
        const int gamma = 1 + static_cast<int>(uniform_int(rng, 0, k - 2));
        const RotationPower r{k, gamma};
        const DirectionVec vs = random_direction(rng);
        const DirectionVec sol = solve_rotation_locus(r, vs);
        // oracle: solve (R - I) p = v* with Eigen and compare spans
        const Mat2 rm = r.matrix();
        Eigen::Matrix2d a;
        a << rm.a - 1.0, rm.b, rm.c, rm.d - 1.0;
        const Eigen::Vector2d p = a.fullPivLu().solve(Eigen::Vector2d(vs.x(), vs.y()));
        CHECK(parallel_lines(sol.vec(), {p(0), p(1)}, 1e-8));
        // defining property: (R - I) sol is parallel to v*
        const Vec2 image = rm.apply(sol.vec()) - sol.vec();
        CHECK(std::abs(cross(image, vs.vec())) < 1e-10);
    }
}

TEST_CASE("scale factor matches the direct projection oracle") {
    // frozen hand value: v = (1,0), w = (s,s), R = rotation pi/2
    const double s = std::sqrt(2.0) / 2.0;
    const double lambda =
        scale_factor(DirectionVec(1.0, 0.0), DirectionVec(s, s), RotationPower{4, 1});
    CHECK(lambda == doctest::Approx(0.7071).epsilon(1e-4));

    std::mt19937_64 rng(13);
    int checked = 0;
    while (checked < 300) {
        const int k = 2 + static_cast<int>(uniform_int(rng, 0, 5));
        const int gamma = 1 + static_cast<int>(uniform_int(rng, 0, k - 2));
        const RotationPower r{k, gamma};
        const DirectionVec v = random_direction(rng);
        const DirectionVec w = random_direction(rng);
        double got;
        try {
            got = scale_factor(v, w, r);
        } catch (const std::domain_error&) {
            continue;
        }
        CHECK(got == doctest::Approx(scale_factor_by_solve(v, w, r)).epsilon(1e-10));
        ++checked;
    }
}

TEST_CASE("scale factor is identically zero for order-two rotations") {
    std::mt19937_64 rng(17);
    for (int i = 0; i < 100; ++i) {
        const int half = 1 + static_cast<int>(uniform_int(rng, 0, 3));
        const RotationPower r{2 * half, half};  // rotation by pi
        REQUIRE(r.is_order_two());
        const DirectionVec v = random_direction(rng);
        DirectionVec w = random_direction(rng);
        // keep w away from v* so the projection is defined
        if (std::abs(cross(w.vec(), vstar(v, r).vec())) < 1e-3) continue;
        CHECK(std::abs(scale_factor(v, w, r)) < 1e-12);
    }
}

TEST_CASE("scale factor rejects w parallel to v*") {
    const DirectionVec v(1.0, 0.0);
    const RotationPower r{4, 1};
    const DirectionVec w = vstar(v, r);
    CHECK_THROWS_AS(scale_factor(v, w, r), std::domain_error);
}

TEST_CASE("composite scale") {
    // any chain containing an order-two link has product zero
    const double lambda = composite_scale({DirectionVec(1.0, 0.0), DirectionVec(0.0, 1.0)},
                                          {RotationPower{2, 1}, RotationPower{4, 1}});
    CHECK(std::abs(lambda) < 1e-12);

    // a one-link chain projects a line onto itself along v* = +-v: undefined
    CHECK_THROWS_AS(composite_scale({DirectionVec(1.0, 0.0)}, {RotationPower{2, 1}}),
                    std::domain_error);

    CHECK_THROWS_AS(composite_scale({DirectionVec(1.0, 0.0), DirectionVec(0.0, 1.0)},
                                    {RotationPower{4, 0}, RotationPower{4, 1}}),
                    std::invalid_argument);

    // two-link cycle with k = 4: sampled products stay away from exactly 1
    std::mt19937_64 rng(23);
    for (int i = 0; i < 100; ++i) {
        const DirectionVec a = random_direction(rng);
        const DirectionVec b = random_direction(rng);
        try {
            const double prod =
                composite_scale({a, b}, {RotationPower{4, 1}, RotationPower{4, 1}});
            CHECK(std::abs(std::abs(prod) - 1.0) > 1e-12);
        } catch (const std::domain_error&) {
            continue;
        }
    }
}

TEST_CASE("scale factor ignores input vector scaling") {
    std::mt19937_64 rng(29);
    for (int i = 0; i < 50; ++i) {
        const RotationPower r{6, 1};
        const Vec2 v{1.0 + uniform_unit(rng), -0.5 + uniform_unit(rng)};
        const Vec2 w{-1.0 + uniform_unit(rng), 2.0 + uniform_unit(rng)};
        try {
            const double a = scale_factor(DirectionVec(v), DirectionVec(w), r);
            const double b = scale_factor(DirectionVec(5.0 * v), DirectionVec(0.25 * w), r);
            CHECK(a == doctest::Approx(b).epsilon(1e-12));
        } catch (const std::domain_error&) {
            continue;
        }
    }
}
