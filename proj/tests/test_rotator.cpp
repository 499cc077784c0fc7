#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <random>

#include "oracles.hpp"
#include "s2re/error.hpp"
#include "s2re/rotator.hpp"

using namespace s2re;

namespace {

struct Repulsive final : PairPotential {
    Repulsive() : PairPotential(1.0) {}
    double value(double d2) const override { return d2; }
    double derivative(double) const override { return 1.0; }
    std::string_view name() const override { return "repulsive"; }
};

// Test-side formula for the mass ratio of the (nu, nu, 1) family.
double nu_formula(double s)
{
    const double s3 = std::pow(std::sin(s), 3), c = std::cos(s);
    return (c - s3) / (s3 * (2 * s3 * c - 1));
}

// Finite-difference Euler-Lagrange accelerations at the rigidly rotating state.
oracle::Lagrangian::Vec6 fd_accelerations(const Masses& m, const Configuration& c, bool cotangent = true)
{
    oracle::Lagrangian lag;
    lag.m = m.m;
    lag.radius = c.radius;
    const double r = c.radius;
    if (cotangent)
        lag.u_of_arc = [r](double s) { return std::cos(s) / (r * std::sin(s)); };
    else
        lag.u_of_arc = [r](double s) { return -2 * r * r * (1 - std::cos(s)); };
    oracle::Lagrangian::Vec6 q, qd;
    q << c.theta[0], c.theta[1], c.theta[2], c.phi[0], c.phi[1], c.phi[2];
    qd << 0, 0, 0, c.omega, c.omega, c.omega;
    return lag.accelerations(q, qd);
}

void check_is_relative_equilibrium(const Masses& m, const Configuration& c, bool cotangent = true)
{
    const auto a = fd_accelerations(m, c, cotangent);
    const double scale = c.omega * c.omega;
    for (int k = 0; k < 6; ++k)
        CHECK(std::abs(a[k]) < 1e-6 * std::max(1.0, scale));
}

} // namespace

TEST_CASE("equilateral equal masses")
{
    for (double m : {0.5, 1.0, 3.0}) {
        for (double r : {0.5, 1.0, 2.0}) {
            const CotangentPotential pot(r);
            const RotatorVerdict v = check_rotator(Masses{{m, m, m}}, {kPi / 2, kPi / 2, kPi / 2}, pot);
            REQUIRE(v.is_rotator);
            CHECK(v.classification == Classification::ExtendedLagrangian);
            CHECK(std::abs(v.omega_squared_scaled - 3 * m) < 1e-12 * m);
            CHECK(std::abs(v.omega_squared * r * r * r - 3 * m) < 1e-12 * m);
            CHECK(v.gamma > 0);
            REQUIRE(v.configuration);
            CHECK(v.configuration->radius == r);
            CHECK(v.configuration->omega == doctest::Approx(std::sqrt(v.omega_squared)));
            const auto rq = rotator_quantities(Masses{{m, m, m}}, {kPi / 2, kPi / 2, kPi / 2}, pot, *v.candidate);
            CHECK(rq.q[0] == doctest::Approx(rq.q[1]));
            CHECK(rq.q[1] == doctest::Approx(rq.q[2]));
            CHECK(reduced_equation_residuals(*v.configuration, Masses{{m, m, m}}, pot).max() < 1e-12 * m);
            check_is_relative_equilibrium(Masses{{m, m, m}}, *v.configuration);
        }
    }
}

TEST_CASE("equilateral shapes of any size")
{
    std::mt19937_64 rng(31);
    const CotangentPotential pot;
    for (int n = 0; n < 100; ++n) {
        const double s = oracle::uniform(rng, 0.02, 2 * kPi / 3 - 0.02);
        const RotatorVerdict v = check_rotator(Masses{{1, 1, 1}}, {s, s, s}, pot);
        REQUIRE(v.is_rotator);
        check_is_relative_equilibrium(Masses{{1, 1, 1}}, *v.configuration);
    }
}

TEST_CASE("equilateral on the equator is Eulerian")
{
    const double s = 2 * kPi / 3;
    const RotatorVerdict v = check_rotator(Masses{{1, 1, 1}}, {s, s, s}, CotangentPotential{});
    CHECK(v.classification == Classification::EquatorialEulerian);
    CHECK_FALSE(v.configuration.has_value());
}

TEST_CASE("meridian shapes are classified")
{
    const RotatorVerdict v = check_rotator(Masses{{1, 2, 3}}, {0.4, 0.5, 0.9}, CotangentPotential{});
    CHECK_FALSE(v.is_rotator);
    CHECK(v.classification == Classification::MeridianEulerian);
}

TEST_CASE("equal-mass scalene shape is not a rotator")
{
    const RotatorVerdict v = check_rotator(Masses{{1, 1, 1}}, {0.9, 1.1, 1.3}, CotangentPotential{});
    CHECK_FALSE(v.is_rotator);
    CHECK(v.residual > 1e-9);
    CHECK(v.classification == Classification::None);
    // oracle agrees
    const auto sp = oracle::rotator_spread({1, 1, 1}, {0.9, 1.1, 1.3}, [](double s) { return oracle::cot_uprime(s); });
    if (sp)
        CHECK(sp->spread > 1e-6);
}

TEST_CASE("equilateral theorem over a mass grid")
{
    const CotangentPotential pot;
    const double grid[] = {1.0, 1.0 + 1e-6, 1.5, 2.0, 3.7, 10.0};
    for (double a : grid) {
        for (double b : grid) {
            for (double s : {0.3, kPi / 2, 1.9}) {
                const Masses m{{1.0, a, b}};
                const RotatorVerdict v = check_rotator(m, {s, s, s}, pot);
                const bool equal = a == 1.0 && b == 1.0;
                CHECK(v.is_rotator == equal);
            }
        }
    }
}

TEST_CASE("repulsive potential is rejected")
{
    std::mt19937_64 rng(32);
    const Repulsive pot;
    for (int n = 0; n < 100; ++n) {
        const auto s = oracle::random_feasible_shape(rng);
        try {
            check_rotator(Masses{{1, 1, 1}}, {s[0], s[1], s[2]}, pot);
            FAIL("expected a throw");
        } catch (const Error& e) {
            CHECK(e.code() == Errc::RepulsivePotential);
        }
    }
}

TEST_CASE("input errors")
{
    const CotangentPotential pot;
    try {
        check_rotator(Masses{{1, 1, 1}}, {0.1, 0.2, 0.5}, pot);
        FAIL("expected a throw");
    } catch (const Error& e) {
        CHECK(e.code() == Errc::InvalidShape);
    }
    try {
        check_rotator(Masses{{1, -1, 1}}, {1, 1, 1}, pot);
        FAIL("expected a throw");
    } catch (const Error& e) {
        CHECK(e.code() == Errc::InvalidArgument);
    }
}

TEST_CASE("two equal masses with a right angle")
{
    const CotangentPotential pot;
    for (double s = 0.98; s < 2.35; s += 0.01) {
        if (std::abs(s - kPi / 2) < 1e-3)
            continue;
        const double nu = nu_formula(s);
        if (!(nu > 0))
            continue;
        const Masses m{{nu, nu, 1.0}};
        const RotatorVerdict v = check_rotator(m, {kPi / 2, s, s}, pot);
        REQUIRE(v.is_rotator);
        const auto o = oracle::rotator_spread(m.m, {kPi / 2, s, s}, [](double x) { return oracle::cot_uprime(x); });
        REQUIRE(o);
        CHECK(o->spread < 1e-9);
        CHECK(std::abs(v.omega_squared - o->omega2) < 1e-9 * o->omega2);
        check_is_relative_equilibrium(m, *v.configuration);

        // properties of every accepted rotator
        const Configuration& c = *v.configuration;
        CHECK(reduced_equation_residuals(c, m, pot).max() < 1e-8);
        CHECK(hemisphere_and_sign_conditions(c));
        for (std::size_t p = 0; p < 3; ++p) {
            const auto [i, j] = pair_bodies(p);
            const double lhs = v.gamma * std::cos(c.theta[i]) * std::cos(c.theta[j]);
            CHECK(std::abs(lhs + pot.derivative_at_arc(Shape{kPi / 2, s, s}.pair(p))) < 1e-9 * std::abs(lhs));
        }

        // sensitivity of the reduced equations
        Configuration bent = c;
        bent.theta[0] += 1e-3;
        const auto res = reduced_equation_residuals(bent, m, pot);
        CHECK(*std::max_element(res.theta.begin(), res.theta.end()) > 1e-5);
    }
}

TEST_CASE("scale invariance in R")
{
    const double s = 1.2;
    const double nu = nu_formula(s);
    const Masses m{{nu, nu, 1.0}};
    const RotatorVerdict base = check_rotator(m, {kPi / 2, s, s}, CotangentPotential{1.0});
    REQUIRE(base.is_rotator);
    for (double r : {0.1, 0.7, 3.0, 50.0}) {
        const RotatorVerdict v = check_rotator(m, {kPi / 2, s, s}, CotangentPotential{r});
        CHECK(v.is_rotator);
        CHECK(std::abs(v.omega_squared_scaled - base.omega_squared_scaled) < 1e-10 * base.omega_squared_scaled);
    }
}

TEST_CASE("relabeling the bodies")
{
    const double s = 1.9;
    const double nu = nu_formula(s);
    const CotangentPotential pot;
    const RotatorVerdict v = check_rotator(Masses{{nu, nu, 1.0}}, {kPi / 2, s, s}, pot);
    REQUIRE(v.is_rotator);
    // cyclic relabel: body k -> k+1. Masses (1, nu, nu); pair (1,2) of the new
    // labels is the old pair (3,1) and so on.
    const RotatorVerdict w = check_rotator(Masses{{1.0, nu, nu}}, {s, kPi / 2, s}, pot);
    REQUIRE(w.is_rotator);
    CHECK(std::abs(w.omega_squared - v.omega_squared) < 1e-10 * v.omega_squared);
    CHECK(std::abs(w.gamma - v.gamma) < 1e-10 * v.gamma);
    CHECK(std::abs(std::cos(w.configuration->theta[0]) - std::cos(v.configuration->theta[2])) < 1e-10);
    CHECK(std::abs(std::cos(w.configuration->theta[1]) - std::cos(v.configuration->theta[0])) < 1e-10);
    // a transposition reverses orientation; the shape is still a rotator
    const RotatorVerdict t = check_rotator(Masses{{nu, 1.0, nu}}, {s, s, kPi / 2}, pot);
    REQUIRE(t.is_rotator);
    CHECK(std::abs(t.omega_squared - v.omega_squared) < 1e-10 * v.omega_squared);
}

TEST_CASE("harmonic test potential")
{
    const HarmonicTestPotential pot;
    for (double s : {0.4, 1.0, 1.7}) {
        const RotatorVerdict v = check_rotator(Masses{{1, 1, 1}}, {s, s, s}, pot);
        REQUIRE(v.is_rotator);
        CHECK(v.omega_squared == doctest::Approx(6.0));
        check_is_relative_equilibrium(Masses{{1, 1, 1}}, *v.configuration, false);
    }
    // the generic condition psi_i psi_j / sqrt(m_i m_j) equal, against the oracle
    std::mt19937_64 rng(33);
    for (int n = 0; n < 300; ++n) {
        const auto mm = oracle::random_masses(rng);
        const auto ss = oracle::random_feasible_shape(rng);
        const Shape shape{ss[0], ss[1], ss[2]};
        if (on_common_geodesic(shape, 1e-6))
            continue;
        const RotatorVerdict v = check_rotator(Masses{mm}, shape, pot);
        const auto o = oracle::rotator_spread(mm, ss, [](double) { return -1.0; });
        if (o && o->spread > 1e-6)
            CHECK_FALSE(v.is_rotator);
    }
}

TEST_CASE("hemisphere and sign conditions")
{
    const RotatorVerdict v = check_rotator(Masses{{1, 1, 1}}, {kPi / 2, kPi / 2, kPi / 2}, CotangentPotential{});
    CHECK(hemisphere_and_sign_conditions(*v.configuration));

    Configuration eq;
    eq.theta = {kPi / 2, kPi / 2, kPi / 2};
    eq.phi = {0, 4 * kPi / 3, 2 * kPi / 3};
    CHECK_FALSE(hemisphere_and_sign_conditions(eq));

    Configuration mer = *v.configuration;
    mer.phi[1] = mer.phi[0];
    CHECK_FALSE(hemisphere_and_sign_conditions(mer));

    Configuration split = *v.configuration;
    split.theta[2] = kPi - split.theta[2];
    CHECK_FALSE(hemisphere_and_sign_conditions(split));
}

TEST_CASE("classification names")
{
    CHECK(to_string(Classification::ExtendedLagrangian) == "extended-lagrangian");
    CHECK(to_string(Classification::EquatorialEulerian) == "equatorial-eulerian");
    CHECK(to_string(Classification::MeridianEulerian) == "meridian-eulerian");
    CHECK(to_string(Classification::FixedPoint) == "fixed-point");
    CHECK(to_string(Classification::None) == "none");
}
