#include "s2re/rotator.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "s2re/error.hpp"

namespace s2re {

std::string_view to_string(Classification c) noexcept
{
    switch (c) {
    case Classification::None: return "none";
    case Classification::ExtendedLagrangian: return "extended-lagrangian";
    case Classification::EquatorialEulerian: return "equatorial-eulerian";
    case Classification::MeridianEulerian: return "meridian-eulerian";
    case Classification::FixedPoint: return "fixed-point";
    }
    return "unknown";
}

RotatorQuantities rotator_quantities(const Masses& masses, const Shape& shape, const PairPotential& potential,
                                     const Candidate& candidate)
{
    RotatorQuantities r;
    for (std::size_t p = 0; p < 3; ++p) {
        const auto [i, j] = pair_bodies(p);
        const double uprime = potential.derivative_at_arc(shape.pair(p));
        r.q[p] = candidate.psi[i] * candidate.psi[j] / (std::sqrt(masses[i] * masses[j]) * uprime);
    }
    r.mean = (r.q[0] + r.q[1] + r.q[2]) / 3.0;
    double spread = 0.0;
    for (double q : r.q)
        spread = std::max(spread, std::abs(q - r.mean));
    r.residual = spread / std::abs(r.mean);
    return r;
}

RotatorVerdict check_rotator(const Masses& masses, const Shape& shape, const PairPotential& potential,
                             const RotatorOptions& options)
{
    validate(masses);
    if (!triangle_feasible(shape))
        throw Error(Errc::InvalidShape, "arc angles violate the spherical triangle inequalities");
    for (std::size_t p = 0; p < 3; ++p) {
        if (!(potential.derivative_at_arc(shape.pair(p)) < 0.0))
            throw Error(Errc::RepulsivePotential, "U' >= 0: a repulsive force admits no Lagrangian relative equilibrium");
    }

    const Mat3 J = build_J(masses, shape);
    const Spectrum spectrum = eigen_decompose(J, options.eigen);
    const auto candidates = positive_candidates(J, spectrum);
    const double total = masses.total();

    RotatorVerdict verdict;
    verdict.residual = std::numeric_limits<double>::infinity();

    if (on_common_geodesic(shape)) {
        // Eulerian shapes are detected, not solved.
        verdict.classification = Classification::MeridianEulerian;
        for (const auto& c : candidates) {
            if (total - c.lambda <= 1e-9 * total) {
                verdict.classification = Classification::EquatorialEulerian;
                verdict.candidate = c;
            }
        }
        return verdict;
    }

    std::optional<RotatorQuantities> best;
    for (const auto& c : candidates) {
        if (!(total - c.lambda > 0.0))
            continue;
        const RotatorQuantities rq = rotator_quantities(masses, shape, potential, c);
        if (rq.mean > 0.0)
            throw Error(Errc::RepulsivePotential, "rotator quantities are positive");
        if (!best || rq.residual < best->residual) {
            best = rq;
            verdict.candidate = c;
        }
    }
    if (!best)
        return verdict;
    verdict.residual = best->residual;
    if (best->residual > options.tolerance)
        return verdict;

    Configuration config;
    try {
        config = translate(masses, shape, *verdict.candidate);
    } catch (const Error& e) {
        if (e.code() != Errc::InvalidTranslation)
            throw;
        return verdict;
    }

    const double omega2 = -2.0 / best->mean;
    const double r = potential.radius();
    double sum_mcos2 = 0.0;
    for (std::size_t k = 0; k < 3; ++k)
        sum_mcos2 += masses[k] * std::cos(config.theta[k]) * std::cos(config.theta[k]);

    config.omega = std::sqrt(omega2);
    config.radius = r;
    verdict.is_rotator = true;
    verdict.omega_squared = omega2;
    verdict.omega_squared_scaled = r * r * r * omega2;
    verdict.gamma = omega2 / (2.0 * sum_mcos2);
    verdict.classification = Classification::ExtendedLagrangian;
    verdict.configuration = config;
    return verdict;
}

double ReducedResiduals::max() const
{
    double m = cxy;
    for (double x : phi)
        m = std::max(m, x);
    for (double x : theta)
        m = std::max(m, x);
    return m;
}

ReducedResiduals reduced_equation_residuals(const Configuration& config, const Masses& masses,
                                            const PairPotential& potential)
{
    const Shape shape = shape_of(config);
    std::array<double, 3> uprime{};
    for (std::size_t p = 0; p < 3; ++p)
        uprime[p] = potential.derivative_at_arc(shape.pair(p));
    auto uprime_between = [&](std::size_t a, std::size_t b) {
        for (std::size_t p = 0; p < 3; ++p) {
            const auto [i, j] = pair_bodies(p);
            if ((i == a && j == b) || (i == b && j == a))
                return uprime[p];
        }
        return 0.0;
    };

    std::array<double, 3> st{}, ct{};
    for (std::size_t k = 0; k < 3; ++k) {
        st[k] = std::sin(config.theta[k]);
        ct[k] = std::cos(config.theta[k]);
    }

    ReducedResiduals out;
    std::array<double, 3> products{};
    for (std::size_t p = 0; p < 3; ++p) {
        const auto [i, j] = pair_bodies(p);
        products[p] = masses[i] * masses[j] * uprime[p] * st[i] * st[j] * std::sin(config.phi[i] - config.phi[j]);
    }
    for (std::size_t p = 0; p < 3; ++p)
        out.phi[p] = std::abs(products[p] - products[(p + 1) % 3]);

    const double w2 = config.omega * config.omega;
    for (std::size_t k = 0; k < 3; ++k) {
        const double lhs = -w2 * masses[k] * st[k] * ct[k];
        double rhs = 0.0;
        for (std::size_t i = 0; i < 3; ++i) {
            if (i == k)
                continue;
            rhs += 2.0 * masses[k] * masses[i] * uprime_between(k, i)
                * (st[k] * ct[i] - ct[k] * st[i] * std::cos(config.phi[k] - config.phi[i]));
        }
        out.theta[k] = std::abs(lhs - rhs);
    }

    double cx = 0.0, cy = 0.0;
    for (std::size_t k = 0; k < 3; ++k) {
        cx += masses[k] * st[k] * ct[k] * std::cos(config.phi[k]);
        cy += masses[k] * st[k] * ct[k] * std::sin(config.phi[k]);
    }
    out.cxy = std::hypot(cx, cy);
    return out;
}

bool hemisphere_and_sign_conditions(const Configuration& config, double tolerance)
{
    int cos_sign = 0, sin_sign = 0;
    for (std::size_t k = 0; k < 3; ++k) {
        if (!(std::sin(config.theta[k]) > tolerance))
            return false;
        const double c = std::cos(config.theta[k]);
        if (std::abs(c) <= tolerance)
            return false;
        const int s = c > 0.0 ? 1 : -1;
        if (cos_sign != 0 && s != cos_sign)
            return false;
        cos_sign = s;
    }
    for (std::size_t p = 0; p < 3; ++p) {
        const auto [i, j] = pair_bodies(p);
        const double s = std::sin(config.phi[i] - config.phi[j]);
        if (std::abs(s) <= tolerance)
            return false;
        const int sg = s > 0.0 ? 1 : -1;
        if (sin_sign != 0 && sg != sin_sign)
            return false;
        sin_sign = sg;
    }
    return true;
}

} // namespace s2re
