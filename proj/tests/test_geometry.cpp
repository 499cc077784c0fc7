#include <doctest.h>

#include <cmath>
#include <random>

#include "oracles.hpp"
#include "s2re/error.hpp"
#include "s2re/geometry.hpp"

using namespace s2re;

TEST_CASE("arc_angle basics")
{
    CHECK(arc_angle(kPi / 2, 0.0, kPi / 2, kPi / 2) == doctest::Approx(kPi / 2).epsilon(1e-15));
    CHECK(arc_angle(0.7, 1.3, 0.7, 1.3) == 0.0);
    CHECK(arc_angle(0.0, 0.0, kPi, 0.0) == doctest::Approx(kPi));

    const double ct = 1.0 / std::sqrt(3.0);
    Configuration c;
    c.theta = {std::acos(ct), std::acos(ct), std::acos(ct)};
    c.phi = {0.0, 4 * kPi / 3, 2 * kPi / 3};
    const Shape s = shape_of(c);
    for (std::size_t p = 0; p < 3; ++p)
        CHECK(std::abs(s.pair(p) - kPi / 2) < 1e-14);
}

TEST_CASE("arc_angle symmetric and invariant under azimuthal shift")
{
    std::mt19937_64 rng(11);
    for (int n = 0; n < 500; ++n) {
        const double ti = oracle::uniform(rng, 0, kPi), tj = oracle::uniform(rng, 0, kPi);
        const double pi_ = oracle::uniform(rng, -7, 7), pj = oracle::uniform(rng, -7, 7);
        const double shift = oracle::uniform(rng, -10, 10);
        const double s = arc_angle(ti, pi_, tj, pj);
        CHECK(s == arc_angle(tj, pj, ti, pi_));
        CHECK(std::abs(s - arc_angle(ti, pi_ + shift, tj, pj + shift)) < 1e-12);
        CHECK(std::abs(s - oracle::arc(oracle::unit(ti, pi_), oracle::unit(tj, pj))) < 1e-12);
        CHECK(s >= 0.0);
        CHECK(s <= kPi);
    }
}

TEST_CASE("chord_from_arc")
{
    CHECK(chord_from_arc(kPi, 1.0) == doctest::Approx(2.0));
    CHECK(chord_from_arc(0.0, 5.0) == 0.0);
    CHECK(chord_from_arc(kPi / 2, 1.0) == doctest::Approx(std::sqrt(2.0)));
    // chord of unit vectors
    std::mt19937_64 rng(3);
    double prev = -1.0;
    for (int n = 0; n <= 1000; ++n) {
        const double s = kPi * n / 1000.0;
        const double d = chord_from_arc(s, 2.5);
        CHECK(d > prev);
        prev = d;
        const Eigen::Vector3d a(0, 0, 2.5), b(2.5 * std::sin(s), 0, 2.5 * std::cos(s));
        CHECK(std::abs(d - (a - b).norm()) < 1e-12);
        CHECK(std::abs(chord_squared(s, 2.5) - d * d) < 1e-11);
    }
}

TEST_CASE("clamp_cosine")
{
    double c = 1.0 + 5e-13;
    CHECK(clamp_cosine(c));
    CHECK(c == 1.0);
    c = -1.0 - 5e-13;
    CHECK(clamp_cosine(c));
    CHECK(c == -1.0);
    c = 1.0 + 1e-9;
    CHECK_FALSE(clamp_cosine(c));
    c = 0.3;
    CHECK(clamp_cosine(c));
    CHECK(c == 0.3);
}

TEST_CASE("triangle_feasible")
{
    CHECK(triangle_feasible({kPi / 2, kPi / 2, kPi / 2}));
    CHECK(triangle_feasible({kPi / 6, kPi / 6, kPi / 6}));
    CHECK_FALSE(triangle_feasible({kPi / 6, kPi / 20, kPi / 20}));
    CHECK_FALSE(triangle_feasible({0.0, 1.0, 1.0}));
    CHECK_FALSE(triangle_feasible({3.0, 3.0, 3.0}));   // sum > 2 pi
    CHECK_FALSE(triangle_feasible({1.0, 1.0, 3.5}));   // arc > pi
    CHECK(triangle_feasible({1.0, 1.0, 2.0}));         // degenerate but allowed
    CHECK(on_common_geodesic({1.0, 1.0, 2.0}));
    CHECK(on_common_geodesic({2 * kPi / 3, 2 * kPi / 3, 2 * kPi / 3}));
    CHECK_FALSE(on_common_geodesic({1.0, 1.0, 1.0}));
    // roundoff at the boundary is tolerated, real violations are not
    CHECK(triangle_feasible({2.0943951023932, 2.0943951023932, 2.0943951023932}));
    CHECK_FALSE(triangle_feasible({2.0944, 2.0944, 2.0944}));
    CHECK(triangle_feasible({1.0, 1.0, 2.0 + 5e-13}));
    CHECK_FALSE(triangle_feasible({1.0, 1.0, 2.0 + 1e-9}));
}

TEST_CASE("temporal_placement")
{
    SUBCASE("equilateral right angles")
    {
        const auto pts = temporal_placement({kPi / 2, kPi / 2, kPi / 2});
        CHECK(std::abs(pts[1].phi - kPi / 2) < 1e-15);
        CHECK(pts[2].theta == 0.0);
        CHECK(pts[0].theta == kPi / 2);
    }
    SUBCASE("equilateral closed form")
    {
        for (double s : {0.2, 0.7, 1.3, 2.0}) {
            const auto pts = temporal_placement({s, s, s});
            CHECK(std::abs(std::cos(pts[1].phi) - std::cos(s) / (1 + std::cos(s))) < 1e-12);
        }
    }
    SUBCASE("round trip")
    {
        std::mt19937_64 rng(5);
        for (int n = 0; n < 2000; ++n) {
            const auto t = oracle::random_feasible_shape(rng, 1e-3);
            const Shape s{t[0], t[1], t[2]};
            const auto pts = temporal_placement(s);
            CHECK(pts[1].phi >= 0.0);
            CHECK(pts[1].phi <= kPi);
            CHECK(std::abs(arc_angle(pts[0], pts[1]) - s.sigma12) < 1e-12);
            CHECK(std::abs(arc_angle(pts[1], pts[2]) - s.sigma23) < 1e-12);
            CHECK(std::abs(arc_angle(pts[2], pts[0]) - s.sigma31) < 1e-12);
        }
    }
    SUBCASE("errors")
    {
        CHECK_THROWS_AS(temporal_placement({1.0, kPi, 1.0}), Error);
        try {
            temporal_placement({0.5, 0.5, kPi});
            FAIL("expected a throw");
        } catch (const Error& e) {
            CHECK(e.code() == Errc::InvalidShape);
        }
        try {
            temporal_placement({2.5, 0.5, 0.5});
            FAIL("expected a throw");
        } catch (const Error& e) {
            CHECK(e.code() == Errc::DegenerateShape);
        }
    }
}

TEST_CASE("validate masses")
{
    CHECK_NOTHROW(validate(Masses{{1, 2, 3}}));
    CHECK_THROWS_AS(validate(Masses{{1, 0, 3}}), Error);
    CHECK_THROWS_AS(validate(Masses{{1, -2, 3}}), Error);
    CHECK_THROWS_AS(validate(Masses{{1, NAN, 3}}), Error);
    CHECK(Masses{{1, 2, 3}}.total() == 6.0);
}
