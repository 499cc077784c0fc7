#pragma once

#include <memory>
#include <string_view>
#include <vector>

namespace s2re {

/// Pair potential U(D^2) of the chord squared, with U'(D^2) = dU/d(D^2).
/// Attractive potentials have U' < 0 on (0, 4 R^2).
class PairPotential {
public:
    explicit PairPotential(double radius);
    virtual ~PairPotential() = default;

    virtual double value(double d2) const = 0;
    virtual double derivative(double d2) const = 0;
    virtual std::string_view name() const = 0;

    /// Arc-angle forms. The defaults go through the chord; subclasses with a
    /// natural arc form override them to keep accuracy near sigma = pi.
    virtual double value_at_arc(double sigma) const;
    virtual double derivative_at_arc(double sigma) const;

    double radius() const { return radius_; }

private:
    double radius_;
};

/// U = cot(sigma) / R, the curved-space analogue of the Newtonian potential.
class CotangentPotential final : public PairPotential {
public:
    explicit CotangentPotential(double radius = 1.0) : PairPotential(radius) {}

    double value(double d2) const override;
    double derivative(double d2) const override;
    double value_at_arc(double sigma) const override;
    double derivative_at_arc(double sigma) const override;
    std::string_view name() const override { return "cotangent"; }
};

/// U = -D^2, U' = -1: attractive everywhere, used to exercise the generic
/// rotator condition.
class HarmonicTestPotential final : public PairPotential {
public:
    explicit HarmonicTestPotential(double radius = 1.0) : PairPotential(radius) {}

    double value(double d2) const override { return -d2; }
    double derivative(double) const override { return -1.0; }
    std::string_view name() const override { return "harmonic-test"; }
};

double cotangent_U(double sigma, double radius);
double cotangent_Uprime(double sigma, double radius);

/// Names accepted by make_potential.
std::vector<std::string_view> potential_names();

/// Throws InvalidArgument for unknown names or a non-positive radius.
std::unique_ptr<PairPotential> make_potential(std::string_view name, double radius);

/// Samples U' on a uniform grid of D^2 over (0, 4 R^2).
bool is_attractive(const PairPotential& potential, int samples = 1000);

} // namespace s2re
