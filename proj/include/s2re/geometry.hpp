#pragma once

#include <array>
#include <cstddef>

#include "s2re/linalg.hpp"

namespace s2re {

/// Arguments of arccos that stray this far outside [-1, 1] are treated as
/// roundoff and clamped; anything beyond is an error.
inline constexpr double kClampTolerance = 1e-12;

inline constexpr double kPi = 3.14159265358979323846;

/// Three point masses. Indexed 0..2 for bodies 1..3.
struct Masses {
    std::array<double, 3> m{1.0, 1.0, 1.0};

    double operator[](std::size_t k) const { return m[k]; }
    double total() const { return m[0] + m[1] + m[2]; }
};

/// Throws InvalidArgument unless every mass is finite and strictly positive.
void validate(const Masses& masses);

/// Mutual arc angles (radians). Pair p = 0, 1, 2 stands for (1,2), (2,3), (3,1).
struct Shape {
    double sigma12 = 0.0;
    double sigma23 = 0.0;
    double sigma31 = 0.0;

    double pair(std::size_t p) const
    {
        return p == 0 ? sigma12 : (p == 1 ? sigma23 : sigma31);
    }
};

/// Bodies (i, j) joined by pair p, following the cyclic order (1,2), (2,3), (3,1).
constexpr std::array<std::size_t, 2> pair_bodies(std::size_t p)
{
    return {p, (p + 1) % 3};
}

struct SphericalPoint {
    double theta = 0.0;
    double phi = 0.0;
};

/// Spherical coordinates of the three bodies, the common angular velocity
/// about the z axis and the sphere radius.
struct Configuration {
    std::array<double, 3> theta{};
    std::array<double, 3> phi{};
    double omega = 0.0;
    double radius = 1.0;

    SphericalPoint point(std::size_t k) const { return {theta[k], phi[k]}; }
};

Vec3 unit_vector(const SphericalPoint& p);

/// Arc angle between two points as seen from the centre, in [0, pi].
double arc_angle(double theta_i, double phi_i, double theta_j, double phi_j);
double arc_angle(const SphericalPoint& a, const SphericalPoint& b);

/// Arc angles of the three bodies of a configuration.
Shape shape_of(const Configuration& config);

/// Chord length 2 R sin(sigma / 2).
double chord_from_arc(double sigma, double radius);
double chord_squared(double sigma, double radius);

/// Clamp an arccos argument that is within kClampTolerance of [-1, 1]. Returns
/// false when the value is genuinely out of range.
bool clamp_cosine(double& c, double tolerance = kClampTolerance);

/// Arcs in (0, pi], triangle inequalities and perimeter <= 2 pi, each with
/// kClampTolerance of slack.
bool triangle_feasible(const Shape& shape);

/// True when the three bodies lie on one great circle (one arc equals the sum
/// of the other two, or the arcs add up to 2 pi).
bool on_common_geodesic(const Shape& shape, double tolerance = 1e-9);

/// Body 3 at the north pole, body 1 on the meridian phi = 0, body 2 at
/// azimuth alpha in [0, pi].
std::array<SphericalPoint, 3> temporal_placement(const Shape& shape);

} // namespace s2re
