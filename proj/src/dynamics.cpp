#include "s2re/dynamics.hpp"

#include <algorithm>
#include <cmath>
#include <ostream>
#include <string>

#include <boost/numeric/odeint.hpp>

#include "s2re/error.hpp"
#include "s2re/format.hpp"

namespace s2re {

namespace {

using OdeState = std::array<double, 12>;

OdeState pack(const State& s)
{
    OdeState x{};
    for (std::size_t k = 0; k < 3; ++k) {
        x[k] = s.theta[k];
        x[3 + k] = s.phi[k];
        x[6 + k] = s.theta_dot[k];
        x[9 + k] = s.phi_dot[k];
    }
    return x;
}

State unpack(const OdeState& x, double t)
{
    State s;
    for (std::size_t k = 0; k < 3; ++k) {
        s.theta[k] = x[k];
        s.phi[k] = x[3 + k];
        s.theta_dot[k] = x[6 + k];
        s.phi_dot[k] = x[9 + k];
    }
    s.t = t;
    return s;
}

Shape shape_of(const State& s)
{
    Configuration c;
    c.theta = s.theta;
    c.phi = s.phi;
    return s2re::shape_of(c);
}

void guard(const State& s, const Shape& shape, double pole_guard, double collision_guard)
{
    for (std::size_t k = 0; k < 3; ++k)
        if (!(std::sin(s.theta[k]) >= pole_guard))
            throw Error(Errc::SingularState, "body " + std::to_string(k + 1) + " reached a pole");
    for (std::size_t p = 0; p < 3; ++p)
        if (!(shape.pair(p) >= collision_guard))
            throw Error(Errc::SingularState, "bodies collided");
}

} // namespace

State state_from_configuration(const Configuration& config)
{
    State s;
    s.theta = config.theta;
    s.phi = config.phi;
    s.phi_dot = {config.omega, config.omega, config.omega};
    return s;
}

Accelerations equations_of_motion(const State& state, const Masses& masses, const PairPotential& potential)
{
    const Shape shape = shape_of(state);
    guard(state, shape, 1e-8, 1e-6);

    std::array<double, 3> st{}, ct{};
    for (std::size_t k = 0; k < 3; ++k) {
        st[k] = std::sin(state.theta[k]);
        ct[k] = std::cos(state.theta[k]);
    }
    std::array<std::array<double, 3>, 3> uprime{};
    for (std::size_t p = 0; p < 3; ++p) {
        const auto [i, j] = pair_bodies(p);
        uprime[i][j] = uprime[j][i] = potential.derivative_at_arc(shape.pair(p));
    }

    // dV/dtheta_k and dV/dphi_k divided by R^2 m_k; dD^2/dq carries 2 R^2.
    Accelerations a;
    for (std::size_t k = 0; k < 3; ++k) {
        double force_theta = 0.0, force_phi = 0.0;
        for (std::size_t i = 0; i < 3; ++i) {
            if (i == k)
                continue;
            const double dphi = state.phi[k] - state.phi[i];
            force_theta += 2.0 * masses[i] * uprime[k][i] * (st[k] * ct[i] - ct[k] * st[i] * std::cos(dphi));
            force_phi += 2.0 * masses[i] * uprime[k][i] * st[k] * st[i] * std::sin(dphi);
        }
        const double td = state.theta_dot[k], pd = state.phi_dot[k];
        a.theta_ddot[k] = st[k] * ct[k] * pd * pd + force_theta;
        a.phi_ddot[k] = (force_phi - 2.0 * st[k] * ct[k] * td * pd) / (st[k] * st[k]);
    }
    return a;
}

AngularMomentum angular_momentum(const State& s, const Masses& masses, double radius)
{
    AngularMomentum c;
    for (std::size_t k = 0; k < 3; ++k) {
        const double st = std::sin(s.theta[k]), ct = std::cos(s.theta[k]);
        const double sp = std::sin(s.phi[k]), cp = std::cos(s.phi[k]);
        c.cx += masses[k] * (-sp * s.theta_dot[k] - st * ct * cp * s.phi_dot[k]);
        c.cy += masses[k] * (cp * s.theta_dot[k] - st * ct * sp * s.phi_dot[k]);
        c.cz += masses[k] * st * st * s.phi_dot[k];
    }
    const double r2 = radius * radius;
    c.cx *= r2;
    c.cy *= r2;
    c.cz *= r2;
    return c;
}

double kinetic_energy(const State& s, const Masses& masses, double radius)
{
    double k = 0.0;
    for (std::size_t i = 0; i < 3; ++i) {
        const double st = std::sin(s.theta[i]);
        k += 0.5 * masses[i] * (s.theta_dot[i] * s.theta_dot[i] + st * st * s.phi_dot[i] * s.phi_dot[i]);
    }
    return radius * radius * k;
}

double potential_term(const State& s, const Masses& masses, const PairPotential& potential)
{
    const Shape shape = shape_of(s);
    double v = 0.0;
    for (std::size_t p = 0; p < 3; ++p) {
        const auto [i, j] = pair_bodies(p);
        v += masses[i] * masses[j] * potential.value_at_arc(shape.pair(p));
    }
    return v;
}

double energy(const State& s, const Masses& masses, const PairPotential& potential)
{
    return kinetic_energy(s, masses, potential.radius()) - potential_term(s, masses, potential);
}

Trajectory integrate(const State& initial, const Masses& masses, const PairPotential& potential, double t_end,
                     const IntegratorOptions& options)
{
    namespace odeint = boost::numeric::odeint;

    if (!(t_end > initial.t))
        throw Error(Errc::InvalidArgument, "t_end must lie after the initial time");

    const double radius = potential.radius();
    auto system = [&](const OdeState& x, OdeState& dxdt, double t) {
        const State s = unpack(x, t);
        const Accelerations a = equations_of_motion(s, masses, potential);
        for (std::size_t k = 0; k < 3; ++k) {
            dxdt[k] = s.theta_dot[k];
            dxdt[3 + k] = s.phi_dot[k];
            dxdt[6 + k] = a.theta_ddot[k];
            dxdt[9 + k] = a.phi_ddot[k];
        }
    };

    Trajectory traj;
    auto record = [&](const OdeState& x, double t) {
        Sample smp;
        smp.t = t;
        smp.state = unpack(x, t);
        smp.shape = shape_of(smp.state);
        guard(smp.state, smp.shape, options.pole_guard, options.collision_guard);
        smp.kinetic = kinetic_energy(smp.state, masses, radius);
        smp.potential = potential_term(smp.state, masses, potential);
        smp.energy = smp.kinetic - smp.potential;
        smp.momentum = angular_momentum(smp.state, masses, radius);
        traj.samples.push_back(smp);
    };

    auto stepper = odeint::make_controlled(options.atol, options.rtol, odeint::runge_kutta_dopri5<OdeState>());
    OdeState x = pack(initial);
    double t = initial.t;
    const double span = t_end - initial.t;
    double dt = span * 1e-4;
    record(x, t);

    std::size_t steps = 0;
    while (t_end - t > 1e-14 * std::max(1.0, std::abs(t_end))) {
        if (t + dt > t_end)
            dt = t_end - t;
        if (stepper.try_step(system, x, t, dt) == odeint::success) {
            record(x, t);
        } else if (dt < options.min_step) {
            throw Error(Errc::StepFailure, "step size collapsed at t = " + std::to_string(t));
        }
        if (++steps > options.max_steps)
            throw Error(Errc::StepFailure, "step budget exhausted at t = " + std::to_string(t));
    }
    return traj;
}

double Trajectory::max_shape_drift() const
{
    double d = 0.0;
    for (const auto& s : samples)
        for (std::size_t p = 0; p < 3; ++p)
            d = std::max(d, std::abs(s.shape.pair(p) - samples.front().shape.pair(p)));
    return d;
}

double Trajectory::max_theta_drift() const
{
    double d = 0.0;
    for (const auto& s : samples)
        for (std::size_t k = 0; k < 3; ++k)
            d = std::max(d, std::abs(s.state.theta[k] - samples.front().state.theta[k]));
    return d;
}

double Trajectory::max_theta_dot() const
{
    double d = 0.0;
    for (const auto& s : samples)
        for (double v : s.state.theta_dot)
            d = std::max(d, std::abs(v));
    return d;
}

double Trajectory::max_phi_dot_spread() const
{
    double d = 0.0;
    for (const auto& s : samples) {
        const auto& w = s.state.phi_dot;
        d = std::max({d, std::abs(w[0] - w[1]), std::abs(w[1] - w[2]), std::abs(w[2] - w[0])});
    }
    return d;
}

double Trajectory::max_energy_drift() const
{
    const double e0 = samples.front().energy;
    double scale = 0.0, d = 0.0;
    for (const auto& s : samples) {
        scale = std::max(scale, s.kinetic + std::abs(s.potential));
        d = std::max(d, std::abs(s.energy - e0));
    }
    return scale > 0.0 ? d / scale : d;
}

double Trajectory::max_momentum_drift() const
{
    const auto& c0 = samples.front().momentum;
    const double n0 = std::sqrt(c0.cx * c0.cx + c0.cy * c0.cy + c0.cz * c0.cz);
    const double scale = n0 != 0.0 ? n0 : 1.0;
    double d = 0.0;
    for (const auto& s : samples) {
        const auto& c = s.momentum;
        const double dx = c.cx - c0.cx, dy = c.cy - c0.cy, dz = c.cz - c0.cz;
        d = std::max(d, std::sqrt(dx * dx + dy * dy + dz * dz) / scale);
    }
    return d;
}

void write_trajectory_csv(std::ostream& out, const Trajectory& trajectory)
{
    out << "t,theta1,theta2,theta3,phi1,phi2,phi3,sigma12,sigma23,sigma31,E,cx,cy,cz\n";
    for (const auto& s : trajectory.samples) {
        out << format_number(s.t);
        for (double v : s.state.theta)
            out << ',' << format_number(v);
        for (double v : s.state.phi)
            out << ',' << format_number(v);
        out << ',' << format_number(s.shape.sigma12) << ',' << format_number(s.shape.sigma23) << ','
            << format_number(s.shape.sigma31) << ',' << format_number(s.energy) << ','
            << format_number(s.momentum.cx) << ',' << format_number(s.momentum.cy) << ','
            << format_number(s.momentum.cz) << '\n';
    }
}

} // namespace s2re
