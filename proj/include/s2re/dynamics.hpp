#pragma once

#include <array>
#include <cstddef>
#include <iosfwd>
#include <vector>

#include "s2re/geometry.hpp"
#include "s2re/potentials.hpp"

namespace s2re {

struct State {
    std::array<double, 3> theta{};
    std::array<double, 3> phi{};
    std::array<double, 3> theta_dot{};
    std::array<double, 3> phi_dot{};
    double t = 0.0;
};

/// Rigid rotation at the configuration's omega: theta_dot = 0, phi_dot = omega.
State state_from_configuration(const Configuration& config);

struct Accelerations {
    std::array<double, 3> theta_ddot{};
    std::array<double, 3> phi_ddot{};
};

/// Euler-Lagrange equations of L = K + V with
/// K = R^2 sum m_k/2 (theta_dot^2 + sin^2 theta phi_dot^2), V = sum m_i m_j U(D_ij^2).
/// R is the potential's radius. Throws SingularState near a pole or a collision.
Accelerations equations_of_motion(const State& state, const Masses& masses, const PairPotential& potential);

struct AngularMomentum {
    double cx = 0.0, cy = 0.0, cz = 0.0;
};

AngularMomentum angular_momentum(const State& state, const Masses& masses, double radius);

double kinetic_energy(const State& state, const Masses& masses, double radius);
double potential_term(const State& state, const Masses& masses, const PairPotential& potential);

/// Conserved energy E = K - V.
double energy(const State& state, const Masses& masses, const PairPotential& potential);

struct IntegratorOptions {
    double rtol = 1e-10;
    double atol = 1e-12;
    double min_step = 1e-14;
    double pole_guard = 1e-8;       ///< abort when sin(theta_k) drops below this
    double collision_guard = 1e-6;  ///< abort when an arc angle drops below this
    std::size_t max_steps = 5'000'000;
};

struct Sample {
    double t = 0.0;
    State state;
    Shape shape;
    double energy = 0.0;
    double kinetic = 0.0;
    double potential = 0.0;  ///< V, so energy = kinetic - potential
    AngularMomentum momentum;
};

struct Trajectory {
    std::vector<Sample> samples;

    double max_shape_drift() const;       ///< max |sigma_ij(t) - sigma_ij(0)|
    double max_theta_drift() const;       ///< max |theta_k(t) - theta_k(0)|
    double max_theta_dot() const;
    double max_phi_dot_spread() const;    ///< max |phi_dot_i - phi_dot_j|
    /// max |E(t) - E(0)| over max (K + |V|): E alone can sit at or near zero.
    double max_energy_drift() const;
    double max_momentum_drift() const;    ///< ||c(t) - c(0)|| relative to ||c(0)|| when nonzero
};

/// Adaptive Dormand-Prince 5(4) integration to t_end, one sample per
/// accepted step. Throws SingularState or StepFailure.
Trajectory integrate(const State& initial, const Masses& masses, const PairPotential& potential, double t_end,
                     const IntegratorOptions& options = {});

/// Columns t, theta1..3, phi1..3, sigma12, sigma23, sigma31, E, cx, cy, cz.
void write_trajectory_csv(std::ostream& out, const Trajectory& trajectory);

} // namespace s2re
