#pragma once

#include <array>
#include <optional>
#include <string_view>

#include "s2re/geometry.hpp"
#include "s2re/inertia.hpp"
#include "s2re/potentials.hpp"

namespace s2re {

enum class Classification {
    None,
    ExtendedLagrangian,
    EquatorialEulerian,
    MeridianEulerian,
    FixedPoint,
};

std::string_view to_string(Classification c) noexcept;

struct RotatorOptions {
    /// Relative spread allowed between the three rotator quantities.
    double tolerance = 1e-9;
    EigenOptions eigen;
};

/// q_ij = psi_i psi_j / (sqrt(m_i m_j) U'(D_ij^2)); a rigid rotator has all
/// three equal to -2 / omega^2.
struct RotatorQuantities {
    std::array<double, 3> q{};
    double mean = 0.0;
    double residual = 0.0;  ///< max |q_ij - mean| / |mean|
};

RotatorQuantities rotator_quantities(const Masses& masses, const Shape& shape, const PairPotential& potential,
                                     const Candidate& candidate);

struct RotatorVerdict {
    bool is_rotator = false;
    double omega_squared = 0.0;         ///< -2 / mean(q)
    double omega_squared_scaled = 0.0;  ///< R^3 omega^2
    double gamma = 0.0;                 ///< omega^2 / (2 sum m_k cos^2 theta_k)
    double residual = 0.0;              ///< best candidate's spread; +inf without candidates
    Classification classification = Classification::None;
    std::optional<Candidate> candidate;
    std::optional<Configuration> configuration;  ///< set for accepted rotators, omega = +sqrt(omega^2)
};

/// Decide whether the shape is a rigid rotator for these masses. Throws
/// InvalidShape for infeasible shapes, InvalidArgument for bad masses and
/// RepulsivePotential when U' > 0 at the shape's chords.
RotatorVerdict check_rotator(const Masses& masses, const Shape& shape, const PairPotential& potential,
                             const RotatorOptions& options = {});

struct ReducedResiduals {
    std::array<double, 3> phi{};    ///< pairwise differences of m_i m_j U' sin sin sin(dphi)
    std::array<double, 3> theta{};  ///< theta equation of each body
    double cxy = 0.0;               ///< |sum m_k sin cos e_k|

    double max() const;
};

/// Residuals of the relative-equilibrium equations at a configuration with
/// its omega. The potential's radius is used for the chords.
ReducedResiduals reduced_equation_residuals(const Configuration& config, const Masses& masses,
                                            const PairPotential& potential);

/// All sin(theta_k) > 0, cos(theta_k) nonzero with one sign, and
/// sin(phi_i - phi_j) nonzero with one sign for (1,2), (2,3), (3,1).
bool hemisphere_and_sign_conditions(const Configuration& config, double tolerance = 1e-12);

} // namespace s2re
