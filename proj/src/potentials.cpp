#include "s2re/potentials.hpp"

#include <cmath>
#include <string>

#include "s2re/error.hpp"
#include "s2re/geometry.hpp"

namespace s2re {

namespace {

void require_interior(double sigma)
{
    if (!(sigma > 0.0 && sigma < kPi) || std::sin(sigma) <= 0.0)
        throw Error(Errc::Singular, "cotangent potential is singular at sigma = " + std::to_string(sigma));
}

// sin and cos of the arc from the chord squared: sin^2(sigma/2) = D^2 / 4R^2.
void arc_from_chord(double d2, double radius, double& s, double& c)
{
    const double h = d2 / (4.0 * radius * radius);
    if (!(h > 0.0 && h < 1.0))
        throw Error(Errc::Singular, "chord squared outside (0, 4 R^2)");
    c = 1.0 - 2.0 * h;
    s = 2.0 * std::sqrt(h * (1.0 - h));
}

} // namespace

PairPotential::PairPotential(double radius) : radius_(radius)
{
    if (!(radius > 0.0) || !std::isfinite(radius))
        throw Error(Errc::InvalidArgument, "sphere radius must be positive");
}

double PairPotential::value_at_arc(double sigma) const { return value(chord_squared(sigma, radius_)); }

double PairPotential::derivative_at_arc(double sigma) const
{
    return derivative(chord_squared(sigma, radius_));
}

double cotangent_U(double sigma, double radius)
{
    require_interior(sigma);
    return std::cos(sigma) / (radius * std::sin(sigma));
}

double cotangent_Uprime(double sigma, double radius)
{
    require_interior(sigma);
    const double s = std::sin(sigma);
    return -1.0 / (2.0 * radius * radius * radius * s * s * s);
}

double CotangentPotential::value(double d2) const
{
    double s, c;
    arc_from_chord(d2, radius(), s, c);
    return c / (radius() * s);
}

double CotangentPotential::derivative(double d2) const
{
    double s, c;
    arc_from_chord(d2, radius(), s, c);
    const double r = radius();
    return -1.0 / (2.0 * r * r * r * s * s * s);
}

double CotangentPotential::value_at_arc(double sigma) const { return cotangent_U(sigma, radius()); }

double CotangentPotential::derivative_at_arc(double sigma) const { return cotangent_Uprime(sigma, radius()); }

std::vector<std::string_view> potential_names() { return {"cotangent", "harmonic-test"}; }

std::unique_ptr<PairPotential> make_potential(std::string_view name, double radius)
{
    if (name == "cotangent")
        return std::make_unique<CotangentPotential>(radius);
    if (name == "harmonic-test")
        return std::make_unique<HarmonicTestPotential>(radius);
    throw Error(Errc::InvalidArgument, "unknown potential '" + std::string(name) + "'");
}

bool is_attractive(const PairPotential& potential, int samples)
{
    const double top = 4.0 * potential.radius() * potential.radius();
    for (int i = 1; i <= samples; ++i) {
        const double d2 = top * i / (samples + 1.0);
        if (!(potential.derivative(d2) < 0.0))
            return false;
    }
    return true;
}

} // namespace s2re
