#pragma once

#include <array>
#include <optional>
#include <vector>

#include "s2re/geometry.hpp"
#include "s2re/linalg.hpp"

namespace s2re {

/// Inertia tensor of the three bodies on the unit sphere (R factored out).
struct InertiaTensor {
    double xx = 0.0, yy = 0.0, zz = 0.0;
    double xy = 0.0, yz = 0.0, zx = 0.0;

    Mat3 matrix() const { return {{{xx, xy, zx}, {xy, yy, yz}, {zx, yz, zz}}}; }
    double trace() const { return xx + yy + zz; }
};

/// Monic cubic lambda^3 + c2 lambda^2 + c1 lambda + c0.
struct CharPoly {
    double c2 = 0.0, c1 = 0.0, c0 = 0.0;

    double operator()(double lambda) const { return ((lambda + c2) * lambda + c1) * lambda + c0; }
};

/// Mass-symmetric tensor J: diagonal holds the pairwise mass sums, the
/// off-diagonal entries are -sqrt(mi mj) cos(sigma_ij).
Mat3 build_J(const Masses& masses, const Shape& shape);

/// Inertia tensor of the temporal placement, used to cross-check J.
InertiaTensor build_I_temporal(const Masses& masses, const Shape& shape);

/// Characteristic polynomial det(lambda - I) expanded in masses and arcs.
CharPoly characteristic_polynomial(const Masses& masses, const Shape& shape);

/// Characteristic polynomial of an arbitrary 3x3 matrix from its invariants.
CharPoly characteristic_polynomial(const Mat3& m);

struct EigenOptions {
    /// Eigenvalues closer than this times ||J|| share one eigenspace.
    double degeneracy_gap = 1e-9;
};

/// Ascending eigenvalues with orthonormal eigenvectors. Eigenvalues sharing a
/// cluster id span one (numerically) degenerate eigenspace.
struct Spectrum {
    std::array<double, 3> values{};
    std::array<Vec3, 3> vectors{};
    std::array<int, 3> cluster{0, 1, 2};

    int multiplicity(std::size_t a) const;
    bool degenerate(std::size_t a) const { return multiplicity(a) > 1; }
};

Spectrum eigen_decompose(const Mat3& m, const EigenOptions& options = {});

/// Cyclic Jacobi rotations. Exposed for testing; eigen_decompose uses it as
/// a fallback when the closed form loses accuracy.
Spectrum eigen_decompose_jacobi(const Mat3& m, const EigenOptions& options = {});

/// A unit eigenvector with strictly positive components.
struct Candidate {
    double lambda = 0.0;
    Vec3 psi{};
    int eigen_index = 0;   ///< lowest index of the eigenspace it was taken from
    int multiplicity = 1;
};

/// Best all-positive unit vector inside the span of an orthonormal basis
/// (1 to 3 vectors): maximises the smallest component. Returns nothing when
/// no vector of the subspace has all components of one strict sign.
std::optional<Vec3> positive_cone_vector(const std::vector<Vec3>& basis, double min_component = 1e-12);

/// One candidate per eigenspace that contains an all-positive unit vector.
std::vector<Candidate> positive_candidates(const Mat3& J, const Spectrum& spectrum);

/// Translation formula cos(theta_k) = psi_k sqrt(M - lambda) / sqrt(m_k),
/// azimuths from the fundamental relation with phi_1 = 0 and
/// sin(phi_i - phi_j) > 0 for (1,2), (2,3), (3,1). omega is left at 0.
Configuration translate(const Masses& masses, const Shape& shape, const Candidate& candidate);

struct TranslatedCandidate {
    Candidate candidate;
    Configuration configuration;
};

/// All candidates that translate to a valid configuration.
std::vector<TranslatedCandidate> shape_to_configurations(const Masses& masses, const Shape& shape,
                                                         const EigenOptions& options = {});

/// Translate the eigenspace containing eigen_index, or the first valid
/// candidate when no index is given. Throws NoPositiveEigenvector or
/// InvalidTranslation.
Configuration shape_to_configuration(const Masses& masses, const Shape& shape,
                                     std::optional<int> eigen_index = std::nullopt,
                                     const EigenOptions& options = {});

} // namespace s2re
