#pragma once

#include <string>
#include <vector>

#include "s2re/geometry.hpp"
#include "s2re/rotator.hpp"

namespace s2re {

// ---------------------------------------------------------------------------
// Equal masses, isosceles sigma23 = sigma31 = sigma, cotangent potential.
// ---------------------------------------------------------------------------

/// q(sigma, sigma12) = cos(s)(2 sin^6 s - sin^6 s12) - sin^3 s cos s12 sin^3 s12.
/// Its zero set holds every equal-mass isosceles rotator (plus squaring artifacts).
double q_function(double sigma, double sigma12);
double q_function_dsigma(double sigma, double sigma12);
double q_function_dsigma12(double sigma, double sigma12);

/// Relative mismatch of the un-squared rotator condition on the branch whose
/// eigenvector is all-positive (the minus branch for cos(sigma) > 0, plus
/// otherwise). Near 0 for genuine rotators, near 2 for squaring artifacts.
double unsquared_branch_mismatch(double sigma, double sigma12);

struct FamilyOptions {
    int scan_points = 2000;
    double root_tolerance = 1e-13;
    RotatorOptions rotator;
};

/// One rotator of the family, for unit masses on the unit sphere.
struct IsoscelesSolution {
    double sigma12 = 0.0;
    double sigma = 0.0;
    double r3_omega2 = 0.0;
    bool equilateral = false;
    double residual = 0.0;
    Configuration configuration;
};

/// All rotators with the given base arc inside sigma12/2 < sigma < pi - sigma12/2,
/// ascending in sigma. Throws NoRoot when none survive.
std::vector<IsoscelesSolution> solve_equal_mass_isosceles(double sigma12, const FamilyOptions& options = {});

struct SpecialPoints {
    double sigma_s = 0.0;            ///< saddle of q on the equilateral line
    double pi_minus_sigma_s = 0.0;
    double sigma_e = 0.0;            ///< left end of the left curve, q(sigma, 2 sigma) = 0
    double two_sigma_e = 0.0;
    std::vector<double> right_angle_sigmas;  ///< cos(sigma12) = cos^2(sigma) on q = 0
};

SpecialPoints special_points(const FamilyOptions& options = {});

struct SymmetryImage {
    double sigma = 0.0;
    double sigma12 = 0.0;
    bool feasible = false;
};

/// (sigma, sigma12) -> (pi - sigma, pi - sigma12), flagged when the image no
/// longer forms a triangle.
SymmetryImage symmetry_map(double sigma, double sigma12);

/// Sampled curve: sigma12 on a grid symmetric about pi/2 and every root at
/// each grid point.
struct FamilyBranch {
    std::string family;
    std::vector<double> grid;
    std::vector<IsoscelesSolution> points;
    SpecialPoints special;
};

FamilyBranch trace_equal_mass_isosceles(int resolution = 512, const FamilyOptions& options = {});

// ---------------------------------------------------------------------------
// Masses (nu m, nu m, m), sigma12 = pi/2, sigma23 = sigma31 = sigma.
// ---------------------------------------------------------------------------

/// nu = (cos s - sin^3 s) / (sin^3 s (2 sin^3 s cos s - 1)).
double two_equal_mass_nu(double sigma);
double two_equal_mass_nu_derivative(double sigma);

/// Root of cos(sigma) = sin^3(sigma): the nu -> 0 end of the curve.
double two_equal_mass_sigma_zero();

struct TwoEqualMassSolution {
    double sigma = 0.0;
    double nu = 0.0;
    double r3_omega2 = 0.0;  ///< 0 for the Eulerian end point
    RotatorVerdict verdict;
};

/// nu(sigma) checked against the rotator test with masses (nu, nu, 1) * m3.
/// The Eulerian end point sigma = 3 pi / 4 is returned with its Eulerian
/// classification. Throws DegenerateDenominator, NonPositiveNu, NotARotator.
TwoEqualMassSolution solve_two_equal_mass(double sigma, double m3 = 1.0, const RotatorOptions& options = {});

/// Every sigma on (sigma_0, 3 pi / 4), sigma != pi / 2, with nu(sigma) = nu
/// that passes the rotator test.
std::vector<double> two_equal_mass_sigmas(double nu, const FamilyOptions& options = {});

/// Rotators for mass ratio nu, including the equilateral one when nu = 1.
int count_two_equal_mass_solutions(double nu, const FamilyOptions& options = {});

/// Local extrema of nu(sigma): three rotators exist for lower < nu < upper.
struct NuBand {
    double lower = 0.0;
    double upper = 0.0;
    double sigma_at_lower = 0.0;
    double sigma_at_upper = 0.0;
};

NuBand two_equal_mass_band(const FamilyOptions& options = {});

std::vector<TwoEqualMassSolution> trace_two_equal_mass(int resolution = 512, double m3 = 1.0);

} // namespace s2re
