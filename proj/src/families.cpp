#include "s2re/families.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "s2re/error.hpp"
#include "s2re/potentials.hpp"
#include "s2re/roots.hpp"

namespace s2re {

namespace {

constexpr double kDuplicateRoot = 1e-9;

double cube(double x) { return x * x * x; }

bool near_right_angle(double sigma) { return std::abs(sigma - 0.5 * kPi) < kDuplicateRoot; }

std::vector<double> dedupe(std::vector<double> xs)
{
    std::sort(xs.begin(), xs.end());
    std::vector<double> out;
    for (double x : xs)
        if (out.empty() || x - out.back() > kDuplicateRoot)
            out.push_back(x);
    return out;
}

} // namespace

double q_function(double sigma, double sigma12)
{
    const double s = std::sin(sigma), c = std::cos(sigma);
    const double s12 = std::sin(sigma12), c12 = std::cos(sigma12);
    const double s6 = cube(s) * cube(s), s12_6 = cube(s12) * cube(s12);
    return c * (2.0 * s6 - s12_6) - cube(s) * c12 * cube(s12);
}

double q_function_dsigma(double sigma, double sigma12)
{
    const double s = std::sin(sigma), c = std::cos(sigma);
    const double s12 = std::sin(sigma12), c12 = std::cos(sigma12);
    const double s12_3 = cube(s12);
    return -s * (2.0 * cube(s) * cube(s) - s12_3 * s12_3) + 12.0 * std::pow(s, 5) * c * c
        - 3.0 * s * s * c * c12 * s12_3;
}

double q_function_dsigma12(double sigma, double sigma12)
{
    const double s = std::sin(sigma), c = std::cos(sigma);
    const double s12 = std::sin(sigma12), c12 = std::cos(sigma12);
    return -6.0 * c * std::pow(s12, 5) * c12 - cube(s) * (3.0 * s12 * s12 * c12 * c12 - std::pow(s12, 4));
}

double unsquared_branch_mismatch(double sigma, double sigma12)
{
    const double s = std::sin(sigma), c = std::cos(sigma);
    const double s12 = std::sin(sigma12), c12 = std::cos(sigma12);
    const double lhs = -4.0 * cube(s) * c + cube(s12) * c12;
    const double rhs = cube(s12) * std::sqrt(8.0 * c * c + c12 * c12);
    const double branch = c < 0.0 ? 1.0 : -1.0;
    return std::abs(lhs - branch * rhs) / std::max({std::abs(lhs), std::abs(rhs), 1e-300});
}

std::vector<IsoscelesSolution> solve_equal_mass_isosceles(double sigma12, const FamilyOptions& options)
{
    if (!(sigma12 > 0.0 && sigma12 < kPi))
        throw Error(Errc::InvalidArgument, "sigma12 must lie in (0, pi)");

    const double lo = 0.5 * sigma12;
    const double hi = kPi - 0.5 * sigma12;

    // q vanishes identically on the equilateral line; dividing it out keeps
    // the neighbouring isosceles root visible as a sign change near the saddle.
    const double slope_at_line = q_function_dsigma(sigma12, sigma12);
    auto deflated = [&](double sigma) {
        const double d = sigma - sigma12;
        if (std::abs(d) < 1e-7)
            return slope_at_line;
        return q_function(sigma, sigma12) / d;
    };
    auto q = [&](double sigma) { return q_function(sigma, sigma12); };
    auto dq = [&](double sigma) { return q_function_dsigma(sigma, sigma12); };

    std::vector<double> found;
    for (double r : roots::scan_roots(deflated, lo, hi, options.scan_points, options.root_tolerance))
        found.push_back(roots::newton_polish(q, dq, r, 1e-10));
    if (sigma12 > lo && sigma12 < hi)
        found.push_back(sigma12);
    found = dedupe(found);

    const CotangentPotential potential(1.0);
    const Masses masses{{1.0, 1.0, 1.0}};
    std::vector<IsoscelesSolution> out;
    for (double sigma : found) {
        const Shape shape{sigma12, sigma, sigma};
        if (!triangle_feasible(shape) || on_common_geodesic(shape))
            continue;
        if (std::abs(std::cos(sigma)) > 1e-12 && unsquared_branch_mismatch(sigma, sigma12) > 1e-6)
            continue;
        const RotatorVerdict v = check_rotator(masses, shape, potential, options.rotator);
        if (!v.is_rotator)
            continue;
        IsoscelesSolution s;
        s.sigma12 = sigma12;
        s.sigma = sigma;
        s.r3_omega2 = v.omega_squared_scaled;
        s.equilateral = std::abs(sigma - sigma12) <= kDuplicateRoot;
        s.residual = v.residual;
        s.configuration = *v.configuration;
        out.push_back(s);
    }
    if (out.empty())
        throw Error(Errc::NoRoot, "no equal-mass isosceles rotator for sigma12 = " + std::to_string(sigma12));
    return out;
}

SpecialPoints special_points(const FamilyOptions& options)
{
    SpecialPoints sp;
    sp.sigma_s = std::acos(std::sqrt(0.1));
    sp.pi_minus_sigma_s = kPi - sp.sigma_s;

    // 32 cos^6 + 8 cos^4 - 4 cos^2 - 1 = 0 on (0, pi/2)
    auto end_poly = [](double sigma) {
        const double x = std::cos(sigma) * std::cos(sigma);
        return ((32.0 * x + 8.0) * x - 4.0) * x - 1.0;
    };
    const auto ends = roots::scan_roots(end_poly, 1e-6, 0.5 * kPi, options.scan_points, 1e-15);
    if (ends.size() != 1)
        throw Error(Errc::NoRoot, "end-point polynomial has " + std::to_string(ends.size()) + " roots on (0, pi/2)");
    sp.sigma_e = ends.front();
    sp.two_sigma_e = 2.0 * sp.sigma_e;

    auto on_right_angle = [](double sigma) {
        return q_function(sigma, std::acos(std::cos(sigma) * std::cos(sigma)));
    };
    const CotangentPotential potential(1.0);
    const Masses masses{{1.0, 1.0, 1.0}};
    for (double sigma :
         roots::scan_roots(on_right_angle, 1e-6, kPi - 1e-6, options.scan_points, options.root_tolerance)) {
        const double sigma12 = std::acos(std::cos(sigma) * std::cos(sigma));
        const Shape shape{sigma12, sigma, sigma};
        if (!triangle_feasible(shape) || on_common_geodesic(shape))
            continue;
        if (check_rotator(masses, shape, potential, options.rotator).is_rotator)
            sp.right_angle_sigmas.push_back(sigma);
    }
    return sp;
}

SymmetryImage symmetry_map(double sigma, double sigma12)
{
    SymmetryImage img;
    img.sigma = kPi - sigma;
    img.sigma12 = kPi - sigma12;
    img.feasible = triangle_feasible({img.sigma12, img.sigma, img.sigma});
    return img;
}

FamilyBranch trace_equal_mass_isosceles(int resolution, const FamilyOptions& options)
{
    if (resolution < 1)
        throw Error(Errc::InvalidArgument, "resolution must be positive");
    FamilyBranch branch;
    branch.family = "equal-mass-isosceles";
    branch.special = special_points(options);
    for (int i = 0; i < resolution; ++i) {
        const double sigma12 = kPi * (i + 1) / (resolution + 1.0);
        branch.grid.push_back(sigma12);
        try {
            for (const auto& s : solve_equal_mass_isosceles(sigma12, options))
                branch.points.push_back(s);
        } catch (const Error& e) {
            if (e.code() != Errc::NoRoot)
                throw;
        }
    }
    return branch;
}

double two_equal_mass_nu(double sigma)
{
    const double s3 = cube(std::sin(sigma)), c = std::cos(sigma);
    const double den = s3 * (2.0 * s3 * c - 1.0);
    if (std::abs(den) < 1e-14)
        throw Error(Errc::DegenerateDenominator, "nu(sigma) denominator vanishes at sigma = " + std::to_string(sigma));
    return (c - s3) / den;
}

double two_equal_mass_nu_derivative(double sigma)
{
    const double s = std::sin(sigma), c = std::cos(sigma);
    const double s3 = cube(s);
    const double num = c - s3;
    const double den = s3 * (2.0 * s3 * c - 1.0);
    if (std::abs(den) < 1e-14)
        throw Error(Errc::DegenerateDenominator, "nu(sigma) denominator vanishes");
    const double dnum = -s - 3.0 * s * s * c;
    const double dden = 12.0 * std::pow(s, 5) * c * c - 2.0 * std::pow(s, 7) - 3.0 * s * s * c;
    return (dnum * den - num * dden) / (den * den);
}

double two_equal_mass_sigma_zero()
{
    return roots::bisect([](double s) { return std::cos(s) - cube(std::sin(s)); }, 0.1, 0.5 * kPi, 1e-15);
}

TwoEqualMassSolution solve_two_equal_mass(double sigma, double m3, const RotatorOptions& options)
{
    if (!(sigma > 0.0 && sigma < kPi))
        throw Error(Errc::InvalidArgument, "sigma must lie in (0, pi)");
    if (near_right_angle(sigma))
        throw Error(Errc::InvalidArgument, "sigma = pi/2 is the equilateral shape, outside this family");

    TwoEqualMassSolution sol;
    sol.sigma = sigma;
    sol.nu = two_equal_mass_nu(sigma);
    if (!(sol.nu > 0.0))
        throw Error(Errc::NonPositiveNu, "nu(" + std::to_string(sigma) + ") = " + std::to_string(sol.nu));

    const Masses masses{{sol.nu * m3, sol.nu * m3, m3}};
    const Shape shape{0.5 * kPi, sigma, sigma};
    if (!triangle_feasible(shape))
        throw Error(Errc::NotARotator, "shape does not form a triangle at sigma = " + std::to_string(sigma));
    sol.verdict = check_rotator(masses, shape, CotangentPotential(1.0), options);
    if (sol.verdict.is_rotator) {
        sol.r3_omega2 = sol.verdict.omega_squared_scaled;
        return sol;
    }
    if (sol.verdict.classification == Classification::EquatorialEulerian
        || sol.verdict.classification == Classification::MeridianEulerian)
        return sol;
    throw Error(Errc::NotARotator, "nu(" + std::to_string(sigma) + ") fails the rotator test, residual "
                    + std::to_string(sol.verdict.residual));
}

std::vector<double> two_equal_mass_sigmas(double nu, const FamilyOptions& options)
{
    const double lo = two_equal_mass_sigma_zero();
    const double hi = 0.75 * kPi;
    auto f = [nu](double s) { return two_equal_mass_nu(s) - nu; };
    std::vector<double> out;
    for (double sigma : roots::scan_roots(f, lo, hi, options.scan_points, options.root_tolerance)) {
        if (near_right_angle(sigma))
            continue;
        try {
            if (solve_two_equal_mass(sigma, 1.0, options.rotator).verdict.is_rotator)
                out.push_back(sigma);
        } catch (const Error& e) {
            if (e.code() != Errc::NotARotator && e.code() != Errc::NonPositiveNu)
                throw;
        }
    }
    return dedupe(out);
}

int count_two_equal_mass_solutions(double nu, const FamilyOptions& options)
{
    if (!(nu > 0.0))
        throw Error(Errc::InvalidArgument, "nu must be positive");
    int n = static_cast<int>(two_equal_mass_sigmas(nu, options).size());
    if (std::abs(nu - 1.0) <= 1e-12)
        ++n;
    return n;
}

NuBand two_equal_mass_band(const FamilyOptions& options)
{
    const double lo = two_equal_mass_sigma_zero();
    const double hi = 0.75 * kPi;
    const auto crit = roots::scan_roots(two_equal_mass_nu_derivative, lo + 1e-6, hi - 1e-6, options.scan_points,
                                        options.root_tolerance);
    if (crit.size() != 2)
        throw Error(Errc::NoRoot, "expected two extrema of nu(sigma), found " + std::to_string(crit.size()));
    NuBand band;
    band.sigma_at_upper = crit[0];
    band.sigma_at_lower = crit[1];
    band.upper = two_equal_mass_nu(crit[0]);
    band.lower = two_equal_mass_nu(crit[1]);
    return band;
}

std::vector<TwoEqualMassSolution> trace_two_equal_mass(int resolution, double m3)
{
    if (resolution < 1)
        throw Error(Errc::InvalidArgument, "resolution must be positive");
    const double lo = two_equal_mass_sigma_zero();
    const double hi = 0.75 * kPi;
    std::vector<TwoEqualMassSolution> out;
    for (int i = 0; i < resolution; ++i) {
        const double sigma = lo + (hi - lo) * (i + 1) / (resolution + 1.0);
        if (near_right_angle(sigma))
            continue;
        try {
            auto sol = solve_two_equal_mass(sigma, m3);
            if (sol.verdict.is_rotator)
                out.push_back(sol);
        } catch (const Error& e) {
            if (e.code() != Errc::NotARotator && e.code() != Errc::NonPositiveNu)
                throw;
        }
    }
    return out;
}

} // namespace s2re
