#pragma once

#include <array>
#include <cmath>

namespace s2re {

using Vec3 = std::array<double, 3>;
using Mat3 = std::array<Vec3, 3>;

inline double dot(const Vec3& a, const Vec3& b)
{
    return a[0] * b[0] + a[1] * b[1] + a[2] * b[2];
}

inline Vec3 cross(const Vec3& a, const Vec3& b)
{
    return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]};
}

inline double norm(const Vec3& a) { return std::sqrt(dot(a, a)); }

inline Vec3 scaled(const Vec3& a, double s) { return {a[0] * s, a[1] * s, a[2] * s}; }

inline Vec3 operator+(const Vec3& a, const Vec3& b) { return {a[0] + b[0], a[1] + b[1], a[2] + b[2]}; }
inline Vec3 operator-(const Vec3& a, const Vec3& b) { return {a[0] - b[0], a[1] - b[1], a[2] - b[2]}; }

inline Vec3 operator*(const Mat3& m, const Vec3& v)
{
    return {dot(m[0], v), dot(m[1], v), dot(m[2], v)};
}

inline double frobenius_norm(const Mat3& m)
{
    double s = 0.0;
    for (const auto& row : m)
        s += dot(row, row);
    return std::sqrt(s);
}

inline double trace(const Mat3& m) { return m[0][0] + m[1][1] + m[2][2]; }

inline double determinant(const Mat3& m) { return dot(m[0], cross(m[1], m[2])); }

} // namespace s2re
