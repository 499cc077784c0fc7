#include "s2re/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "s2re/error.hpp"

namespace s2re {

void validate(const Masses& masses)
{
    for (double m : masses.m) {
        if (!std::isfinite(m) || m <= 0.0)
            throw Error(Errc::InvalidArgument, "masses must be finite and positive, got " + std::to_string(m));
    }
}

Vec3 unit_vector(const SphericalPoint& p)
{
    const double s = std::sin(p.theta);
    return {s * std::cos(p.phi), s * std::sin(p.phi), std::cos(p.theta)};
}

double arc_angle(double theta_i, double phi_i, double theta_j, double phi_j)
{
    // atan2 of |u x v| and u.v is arccos of the fundamental relation without
    // its loss of accuracy near 0 and pi.
    const Vec3 u = unit_vector({theta_i, phi_i});
    const Vec3 v = unit_vector({theta_j, phi_j});
    return std::atan2(norm(cross(u, v)), dot(u, v));
}

double arc_angle(const SphericalPoint& a, const SphericalPoint& b)
{
    return arc_angle(a.theta, a.phi, b.theta, b.phi);
}

Shape shape_of(const Configuration& config)
{
    return {arc_angle(config.point(0), config.point(1)),
            arc_angle(config.point(1), config.point(2)),
            arc_angle(config.point(2), config.point(0))};
}

double chord_from_arc(double sigma, double radius)
{
    return 2.0 * radius * std::sin(0.5 * sigma);
}

double chord_squared(double sigma, double radius)
{
    const double d = chord_from_arc(sigma, radius);
    return d * d;
}

bool clamp_cosine(double& c, double tolerance)
{
    if (c > 1.0) {
        if (c > 1.0 + tolerance)
            return false;
        c = 1.0;
    } else if (c < -1.0) {
        if (c < -1.0 - tolerance)
            return false;
        c = -1.0;
    }
    return true;
}

bool triangle_feasible(const Shape& shape)
{
    // Boundary cases typed to finite precision (2 pi / 3 three times, say)
    // may overshoot by roundoff; the same slack as arccos clamping applies.
    const double tol = kClampTolerance;
    const double a = shape.sigma12, b = shape.sigma23, c = shape.sigma31;
    for (double s : {a, b, c}) {
        if (!std::isfinite(s) || s <= 0.0 || s > kPi + tol)
            return false;
    }
    return a <= b + c + tol && b <= c + a + tol && c <= a + b + tol && a + b + c <= 2.0 * kPi + tol;
}

bool on_common_geodesic(const Shape& shape, double tolerance)
{
    const double a = shape.sigma12, b = shape.sigma23, c = shape.sigma31;
    return std::abs(a - (b + c)) <= tolerance || std::abs(b - (c + a)) <= tolerance
        || std::abs(c - (a + b)) <= tolerance || std::abs(a + b + c - 2.0 * kPi) <= tolerance;
}

std::array<SphericalPoint, 3> temporal_placement(const Shape& shape)
{
    const double s31 = std::sin(shape.sigma31);
    const double s23 = std::sin(shape.sigma23);
    if (!(std::abs(s31 * s23) > 1e-15))
        throw Error(Errc::InvalidShape, "body 1 or body 2 sits at a pole of the temporal frame");

    double cos_alpha = (std::cos(shape.sigma12) - std::cos(shape.sigma31) * std::cos(shape.sigma23)) / (s31 * s23);
    if (!clamp_cosine(cos_alpha))
        throw Error(Errc::DegenerateShape, "arc angles do not form a spherical triangle");

    const double alpha = std::acos(cos_alpha);
    return {SphericalPoint{shape.sigma31, 0.0}, SphericalPoint{shape.sigma23, alpha}, SphericalPoint{0.0, 0.0}};
}

} // namespace s2re
