#include "s2re/inertia.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "s2re/error.hpp"

namespace s2re {

Mat3 build_J(const Masses& masses, const Shape& shape)
{
    const double m1 = masses[0], m2 = masses[1], m3 = masses[2];
    const double j12 = -std::sqrt(m1 * m2) * std::cos(shape.sigma12);
    const double j23 = -std::sqrt(m2 * m3) * std::cos(shape.sigma23);
    const double j31 = -std::sqrt(m3 * m1) * std::cos(shape.sigma31);
    return {{{m2 + m3, j12, j31}, {j12, m3 + m1, j23}, {j31, j23, m1 + m2}}};
}

InertiaTensor build_I_temporal(const Masses& masses, const Shape& shape)
{
    const auto placed = temporal_placement(shape);
    const double alpha = placed[1].phi;
    const double m1 = masses[0], m2 = masses[1], m3 = masses[2];

    const double c31 = std::cos(shape.sigma31), s31 = std::sin(shape.sigma31);
    const double c23 = std::cos(shape.sigma23), s23 = std::sin(shape.sigma23);
    const double ca = std::cos(alpha), sa = std::sin(alpha);

    InertiaTensor I;
    I.xx = m1 * c31 * c31 + m2 * (c23 * c23 + s23 * s23 * sa * sa) + m3;
    I.yy = m3 + m1 + m2 * (c23 * c23 + s23 * s23 * ca * ca);
    I.zz = m1 * s31 * s31 + m2 * s23 * s23;
    I.xy = -m2 * s23 * s23 * sa * ca;
    I.yz = -m2 * s23 * c23 * sa;
    I.zx = -m1 * s31 * c31 - m2 * s23 * c23 * ca;
    return I;
}

CharPoly characteristic_polynomial(const Masses& masses, const Shape& shape)
{
    const double m1 = masses[0], m2 = masses[1], m3 = masses[2];
    const double a = m1 + m2, b = m2 + m3, c = m3 + m1;
    const double c12 = std::cos(shape.sigma12), c23 = std::cos(shape.sigma23), c31 = std::cos(shape.sigma31);
    const double w12 = m1 * m2 * c12 * c12;
    const double w23 = m2 * m3 * c23 * c23;
    const double w31 = m3 * m1 * c31 * c31;

    // (l-a)(l-b)(l-c) - (l-a) w12 - (l-b) w23 - (l-c) w31 + 2 m1 m2 m3 c12 c23 c31
    CharPoly p;
    p.c2 = -(a + b + c);
    p.c1 = a * b + b * c + c * a - w12 - w23 - w31;
    p.c0 = -a * b * c + a * w12 + b * w23 + c * w31 + 2.0 * m1 * m2 * m3 * c12 * c23 * c31;
    return p;
}

CharPoly characteristic_polynomial(const Mat3& m)
{
    const double minors = m[0][0] * m[1][1] - m[0][1] * m[1][0] + m[1][1] * m[2][2] - m[1][2] * m[2][1]
        + m[0][0] * m[2][2] - m[0][2] * m[2][0];
    return {-trace(m), minors, -determinant(m)};
}

std::optional<Vec3> positive_cone_vector(const std::vector<Vec3>& basis, double min_component)
{
    auto min_of = [](const Vec3& v) { return std::min({v[0], v[1], v[2]}); };

    if (basis.size() >= 3) {
        const double s = 1.0 / std::sqrt(3.0);
        return Vec3{s, s, s};
    }
    if (basis.size() == 1) {
        const Vec3& v = basis[0];
        if (min_of(v) > min_component)
            return v;
        if (min_of(scaled(v, -1.0)) > min_component)
            return scaled(v, -1.0);
        return std::nullopt;
    }
    if (basis.size() != 2)
        return std::nullopt;

    // Maximise min_k (u_k cos t + v_k sin t). The optimum sits at the peak of
    // one sinusoid or where two of them cross.
    const Vec3& u = basis[0];
    const Vec3& v = basis[1];
    std::vector<double> angles;
    for (std::size_t k = 0; k < 3; ++k)
        angles.push_back(std::atan2(v[k], u[k]));
    for (std::size_t i = 0; i < 3; ++i) {
        for (std::size_t j = i + 1; j < 3; ++j) {
            const double t = std::atan2(-(u[i] - u[j]), v[i] - v[j]);
            angles.push_back(t);
            angles.push_back(t + kPi);
        }
    }
    double best_value = -std::numeric_limits<double>::infinity();
    Vec3 best{};
    for (double t : angles) {
        const Vec3 w = scaled(u, std::cos(t)) + scaled(v, std::sin(t));
        if (min_of(w) > best_value) {
            best_value = min_of(w);
            best = w;
        }
    }
    if (best_value > min_component)
        return scaled(best, 1.0 / norm(best));
    return std::nullopt;
}

std::vector<Candidate> positive_candidates(const Mat3& J, const Spectrum& spectrum)
{
    std::vector<Candidate> out;
    for (std::size_t a = 0; a < 3; ++a) {
        if (a > 0 && spectrum.cluster[a] == spectrum.cluster[a - 1])
            continue;
        std::vector<Vec3> basis;
        for (std::size_t b = a; b < 3 && spectrum.cluster[b] == spectrum.cluster[a]; ++b)
            basis.push_back(spectrum.vectors[b]);
        const auto psi = positive_cone_vector(basis);
        if (!psi)
            continue;
        Candidate c;
        c.psi = *psi;
        c.lambda = basis.size() == 1 ? spectrum.values[a] : dot(*psi, J * *psi);
        c.eigen_index = static_cast<int>(a);
        c.multiplicity = static_cast<int>(basis.size());
        out.push_back(c);
    }
    return out;
}

Configuration translate(const Masses& masses, const Shape& shape, const Candidate& candidate)
{
    // M - lambda as the Rayleigh quotient of M - J: forming the difference
    // directly cancels badly when the bodies crowd the equator.
    const auto& psi = candidate.psi;
    long double rq = 0.0L;
    for (std::size_t k = 0; k < 3; ++k)
        rq += static_cast<long double>(masses[k]) * psi[k] * psi[k];
    for (std::size_t p = 0; p < 3; ++p) {
        const auto [i, j] = pair_bodies(p);
        rq += 2.0L * std::sqrt(static_cast<long double>(masses[i]) * masses[j])
            * std::cos(static_cast<long double>(shape.pair(p))) * psi[i] * psi[j];
    }
    const double spare = static_cast<double>(rq);
    if (!(spare > 0.0))
        throw Error(Errc::InvalidTranslation, "eigenvalue reaches the total mass; bodies would sit on the equator");

    Configuration config;
    std::array<double, 3> cos_t{}, sin_t{};
    for (std::size_t k = 0; k < 3; ++k) {
        cos_t[k] = candidate.psi[k] * std::sqrt(spare / masses[k]);
        if (!(cos_t[k] > 0.0 && cos_t[k] < 1.0))
            throw Error(Errc::InvalidTranslation, "cos(theta_" + std::to_string(k + 1) + ") = "
                            + std::to_string(cos_t[k]) + " outside (0, 1)");
        sin_t[k] = std::sqrt((1.0 - cos_t[k]) * (1.0 + cos_t[k]));
        config.theta[k] = std::atan2(sin_t[k], cos_t[k]);
    }

    // cos(phi_i - phi_j) = (cos sigma - cos cos) / (sin sin), rewritten in
    // half angles so gaps near 0 or pi do not lose digits:
    // sin^2(gap/2) sin_i sin_j = sin((sigma - d)/2) sin((sigma + d)/2), d = theta_i - theta_j
    // cos^2(gap/2) sin_i sin_j = sin((s - sigma)/2) sin((s + sigma)/2), s = theta_i + theta_j
    std::array<double, 3> gap{};
    for (std::size_t p = 0; p < 3; ++p) {
        const auto [i, j] = pair_bodies(p);
        const double sigma = shape.pair(p);
        const double d = config.theta[i] - config.theta[j];
        const double s = config.theta[i] + config.theta[j];
        double a = std::sin(0.5 * (sigma - d)) * std::sin(0.5 * (sigma + d));
        double b = std::sin(0.5 * (s - sigma)) * std::sin(0.5 * (s + sigma));
        const double tol = kClampTolerance * sin_t[i] * sin_t[j];
        if (a < -tol || b < -tol)
            throw Error(Errc::InvalidTranslation, "recovered cos(phi_i - phi_j) outside [-1, 1]");
        a = std::max(a, 0.0);
        b = std::max(b, 0.0);
        gap[p] = 2.0 * std::atan2(std::sqrt(a), std::sqrt(b));
    }
    // A principal axis through the positive cone sees the three bodies all
    // around it, so the azimuthal gaps close to a full turn.
    if (std::abs(gap[0] + gap[1] + gap[2] - 2.0 * kPi) > 1e-6)
        throw Error(Errc::InvalidTranslation, "azimuthal gaps do not close to 2 pi");

    // phi_i - phi_j = gap for each cyclic pair. The azimuth of the body
    // nearest a pole is ill-conditioned, so anchor on the other two and
    // attach it last; its error then enters the arcs scaled by its sin(theta).
    const std::size_t b = static_cast<std::size_t>(std::min_element(sin_t.begin(), sin_t.end()) - sin_t.begin());
    const auto [i, j] = pair_bodies((b + 1) % 3);
    std::array<double, 3> phi{};
    phi[i] = 0.0;
    phi[j] = -gap[(b + 1) % 3];
    phi[b] = gap[b];
    for (std::size_t k = 0; k < 3; ++k) {
        double x = phi[k] - phi[0];
        if (x < 0.0)
            x += 2.0 * kPi;
        config.phi[k] = x;
    }
    return config;
}

std::vector<TranslatedCandidate> shape_to_configurations(const Masses& masses, const Shape& shape,
                                                         const EigenOptions& options)
{
    const Mat3 J = build_J(masses, shape);
    std::vector<TranslatedCandidate> out;
    for (const auto& c : positive_candidates(J, eigen_decompose(J, options))) {
        try {
            out.push_back({c, translate(masses, shape, c)});
        } catch (const Error& e) {
            if (e.code() != Errc::InvalidTranslation)
                throw;
        }
    }
    return out;
}

Configuration shape_to_configuration(const Masses& masses, const Shape& shape, std::optional<int> eigen_index,
                                     const EigenOptions& options)
{
    const Mat3 J = build_J(masses, shape);
    const Spectrum spectrum = eigen_decompose(J, options);
    const auto candidates = positive_candidates(J, spectrum);

    if (eigen_index) {
        if (*eigen_index < 0 || *eigen_index > 2)
            throw Error(Errc::InvalidArgument, "eigen index must be 0, 1 or 2");
        const int cluster = spectrum.cluster[static_cast<std::size_t>(*eigen_index)];
        for (const auto& c : candidates)
            if (spectrum.cluster[static_cast<std::size_t>(c.eigen_index)] == cluster)
                return translate(masses, shape, c);
        throw Error(Errc::NoPositiveEigenvector,
                    "eigenvector " + std::to_string(*eigen_index) + " has components of both signs or a zero");
    }

    if (candidates.empty())
        throw Error(Errc::NoPositiveEigenvector, "no eigenvector with all components of one sign");
    for (const auto& c : candidates) {
        try {
            return translate(masses, shape, c);
        } catch (const Error& e) {
            if (e.code() != Errc::InvalidTranslation)
                throw;
        }
    }
    throw Error(Errc::InvalidTranslation, "no positive eigenvector translates to a configuration");
}

} // namespace s2re
