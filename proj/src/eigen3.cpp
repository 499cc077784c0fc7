// Symmetric 3x3 eigenproblem: trigonometric roots of the characteristic
// polynomial with a Newton step and cross-product eigenvectors, falling back
// to Jacobi rotations when roots cluster or residuals are not at roundoff.

#include <algorithm>
#include <cmath>
#include <numeric>

#include "s2re/inertia.hpp"

namespace s2re {

namespace {

constexpr double kClusterRelGap = 1e-6;
constexpr double kResidualTol = 1e-13;

Mat3 identity() { return {{{1.0, 0.0, 0.0}, {0.0, 1.0, 0.0}, {0.0, 0.0, 1.0}}}; }

Vec3 column(const Mat3& m, int c) { return {m[0][c], m[1][c], m[2][c]}; }

Vec3 normalized(const Vec3& v) { return scaled(v, 1.0 / norm(v)); }

// Largest component (by magnitude) made positive, so output is reproducible.
Vec3 canonical_sign(const Vec3& v)
{
    std::size_t k = 0;
    for (std::size_t i = 1; i < 3; ++i)
        if (std::abs(v[i]) > std::abs(v[k]) + 1e-14)
            k = i;
    return v[k] < 0.0 ? scaled(v, -1.0) : v;
}

void assign_clusters(Spectrum& s, double threshold)
{
    int id = 0;
    s.cluster[0] = 0;
    for (std::size_t a = 1; a < 3; ++a) {
        if (s.values[a] - s.values[a - 1] >= threshold)
            ++id;
        s.cluster[a] = id;
    }
}

Spectrum finish(std::array<double, 3> values, std::array<Vec3, 3> vectors, const Mat3& m,
                const EigenOptions& options)
{
    std::array<std::size_t, 3> order{0, 1, 2};
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return values[a] < values[b]; });
    Spectrum s;
    for (std::size_t a = 0; a < 3; ++a) {
        s.values[a] = values[order[a]];
        s.vectors[a] = canonical_sign(vectors[order[a]]);
    }
    const double scale = std::max(frobenius_norm(m), 1e-300);
    assign_clusters(s, options.degeneracy_gap * scale);
    return s;
}

// Null vector of (B - lambda I) from the best-conditioned cross product of rows.
Vec3 null_vector(const Mat3& b, double lambda)
{
    Mat3 a = b;
    for (int i = 0; i < 3; ++i)
        a[i][i] -= lambda;
    const std::array<Vec3, 3> candidates{cross(a[0], a[1]), cross(a[0], a[2]), cross(a[1], a[2])};
    std::size_t best = 0;
    for (std::size_t i = 1; i < 3; ++i)
        if (norm(candidates[i]) > norm(candidates[best]))
            best = i;
    return candidates[best];
}

double max_residual(const Mat3& m, const std::array<double, 3>& values, const std::array<Vec3, 3>& vectors)
{
    double r = 0.0;
    for (std::size_t a = 0; a < 3; ++a)
        r = std::max(r, norm(m * vectors[a] - scaled(vectors[a], values[a])));
    return r;
}

} // namespace

int Spectrum::multiplicity(std::size_t a) const
{
    return static_cast<int>(std::count(cluster.begin(), cluster.end(), cluster[a]));
}

Spectrum eigen_decompose_jacobi(const Mat3& m, const EigenOptions& options)
{
    Mat3 a = m;
    Mat3 v = identity();
    const double fro = frobenius_norm(m);

    for (int sweep = 0; sweep < 64; ++sweep) {
        const double off = a[0][1] * a[0][1] + a[0][2] * a[0][2] + a[1][2] * a[1][2];
        if (off == 0.0 || std::sqrt(off) <= 1e-18 * fro)
            break;
        for (int p = 0; p < 2; ++p) {
            for (int q = p + 1; q < 3; ++q) {
                const double apq = a[p][q];
                if (apq == 0.0)
                    continue;
                const double theta = (a[q][q] - a[p][p]) / (2.0 * apq);
                const double t = (theta >= 0.0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
                const double c = 1.0 / std::sqrt(t * t + 1.0);
                const double s = t * c;

                Mat3 g = identity();
                g[p][p] = c;
                g[q][q] = c;
                g[p][q] = s;
                g[q][p] = -s;

                Mat3 ag{}, gtag{}, vg{};
                for (int i = 0; i < 3; ++i)
                    for (int j = 0; j < 3; ++j)
                        for (int k = 0; k < 3; ++k) {
                            ag[i][j] += a[i][k] * g[k][j];
                            vg[i][j] += v[i][k] * g[k][j];
                        }
                for (int i = 0; i < 3; ++i)
                    for (int j = 0; j < 3; ++j)
                        for (int k = 0; k < 3; ++k)
                            gtag[i][j] += g[k][i] * ag[k][j];
                for (int i = 0; i < 3; ++i)
                    for (int j = i + 1; j < 3; ++j)
                        gtag[i][j] = gtag[j][i] = 0.5 * (gtag[i][j] + gtag[j][i]);
                gtag[p][q] = gtag[q][p] = 0.0;
                a = gtag;
                v = vg;
            }
        }
    }
    return finish({a[0][0], a[1][1], a[2][2]}, {column(v, 0), column(v, 1), column(v, 2)}, m, options);
}

Spectrum eigen_decompose(const Mat3& m, const EigenOptions& options)
{
    double scale = 0.0;
    for (const auto& row : m)
        for (double x : row)
            scale = std::max(scale, std::abs(x));
    if (scale == 0.0)
        return eigen_decompose_jacobi(m, options);

    Mat3 b = m;
    for (auto& row : b)
        for (double& x : row)
            x /= scale;

    const double q = trace(b) / 3.0;
    const double p1 = b[0][1] * b[0][1] + b[0][2] * b[0][2] + b[1][2] * b[1][2];
    const double p2 = (b[0][0] - q) * (b[0][0] - q) + (b[1][1] - q) * (b[1][1] - q) + (b[2][2] - q) * (b[2][2] - q)
        + 2.0 * p1;
    if (p2 <= 1e-24)
        return eigen_decompose_jacobi(m, options);

    const double p = std::sqrt(p2 / 6.0);
    Mat3 c = b;
    for (int i = 0; i < 3; ++i) {
        c[i][i] -= q;
        for (int j = 0; j < 3; ++j)
            c[i][j] /= p;
    }
    const double r = std::clamp(determinant(c) / 2.0, -1.0, 1.0);
    const double phi = std::acos(r) / 3.0;
    std::array<double, 3> e{q + 2.0 * p * std::cos(phi + 2.0 * kPi / 3.0), 0.0, q + 2.0 * p * std::cos(phi)};
    e[1] = 3.0 * q - e[0] - e[2];

    const CharPoly poly = characteristic_polynomial(b);
    for (double& x : e) {
        const double d = (3.0 * x + 2.0 * poly.c2) * x + poly.c1;
        if (d != 0.0)
            x -= poly(x) / d;
    }
    std::sort(e.begin(), e.end());

    const double bnorm = frobenius_norm(b);
    if (e[1] - e[0] < kClusterRelGap * bnorm || e[2] - e[1] < kClusterRelGap * bnorm)
        return eigen_decompose_jacobi(m, options);

    const Vec3 lo = normalized(null_vector(b, e[0]));
    const Vec3 hi = normalized(null_vector(b, e[2]));
    const Vec3 mid = normalized(cross(hi, lo));

    const std::array<double, 3> values{e[0] * scale, e[1] * scale, e[2] * scale};
    const std::array<Vec3, 3> vectors{lo, mid, hi};
    if (std::abs(dot(lo, hi)) > kResidualTol || max_residual(m, values, vectors) > kResidualTol * frobenius_norm(m))
        return eigen_decompose_jacobi(m, options);
    return finish(values, vectors, m, options);
}

} // namespace s2re
