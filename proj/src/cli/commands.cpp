#include "s2re/cli.hpp"

#include <cmath>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <memory>
#include <ostream>

#include <CLI11.hpp>

#include "output.hpp"
#include "s2re/dynamics.hpp"
#include "s2re/error.hpp"
#include "s2re/families.hpp"
#include "s2re/format.hpp"
#include "s2re/rotator.hpp"

namespace s2re::cli {

namespace {

using nlohmann::json;

struct Common {
    std::string masses;
    std::string shape;
    std::string potential = "cotangent";
    double radius = 1.0;
    double tol = 1e-9;
    int resolution = 512;
    std::string out;
    std::string format;
    bool degrees = false;
};

int exit_code_for(Errc code)
{
    switch (code) {
    case Errc::InvalidArgument:
    case Errc::InvalidShape:
    case Errc::DegenerateShape:
        return kInputError;
    case Errc::RepulsivePotential:
    case Errc::NotARotator:
    case Errc::NoRoot:
    case Errc::NonPositiveNu:
    case Errc::NoPositiveEigenvector:
        return kNoRotator;
    default:
        return kNumericalFailure;
    }
}

Masses read_masses(const Common& c)
{
    const auto v = parse_triple(c.masses, "--masses");
    Masses m{{v[0], v[1], v[2]}};
    validate(m);
    return m;
}

Shape read_shape(const Common& c)
{
    auto v = parse_triple(c.shape, "--shape");
    if (c.degrees)
        for (double& x : v)
            x *= kPi / 180.0;
    return Shape{v[0], v[1], v[2]};
}

void require_format(const std::string& format)
{
    if (format != "csv" && format != "json")
        throw Error(Errc::InvalidArgument, "--format must be csv or json");
}

std::array<double, 3> cos_phi_differences(const Configuration& cfg)
{
    std::array<double, 3> r{};
    for (std::size_t p = 0; p < 3; ++p) {
        const auto [i, j] = pair_bodies(p);
        r[p] = std::cos(cfg.phi[i] - cfg.phi[j]);
    }
    return r;
}

// Family rows are printed to 12 digits. Near the pi/2 crossing that rounding
// alone can push a root past the rotator tolerance, so each row is checked
// at its printed precision and dropped when it no longer passes.
bool passes_as_printed(const std::array<std::string, 3>& masses, const std::array<std::string, 3>& shape)
{
    auto num = [](const std::string& x) { return std::strtod(x.c_str(), nullptr); };
    try {
        const RotatorVerdict v = check_rotator(Masses{{num(masses[0]), num(masses[1]), num(masses[2])}},
                                               {num(shape[0]), num(shape[1]), num(shape[2])}, CotangentPotential{});
        return v.is_rotator;
    } catch (const Error&) {
        return false;
    }
}

void report_dropped(std::ostream& err, std::size_t dropped)
{
    if (dropped > 0)
        err << "note: " << dropped << " point(s) omitted; their 12-digit values fail the rotator check\n";
}

int emit(const Common& c, std::ostream& out, std::ostream& err, const std::function<void(std::ostream&)>& write)
{
    Sink sink(c.out, out);
    if (!sink.ok()) {
        err << "error: cannot open " << c.out << " for writing\n";
        return kInputError;
    }
    write(sink.stream());
    return kSuccess;
}

// --------------------------------------------------------------------------

int cmd_check(const Common& c, std::ostream& out, std::ostream& err)
{
    const std::string format = c.format.empty() ? "json" : c.format;
    require_format(format);
    const Masses masses = read_masses(c);
    const Shape shape = read_shape(c);
    const auto potential = make_potential(c.potential, c.radius);
    RotatorOptions opts;
    opts.tolerance = c.tol;

    const RotatorVerdict v = check_rotator(masses, shape, *potential, opts);

    std::array<double, 3> cos_theta{}, cos_dphi{};
    double reduced = std::nan("");
    if (v.configuration) {
        for (std::size_t k = 0; k < 3; ++k)
            cos_theta[k] = std::cos(v.configuration->theta[k]);
        cos_dphi = cos_phi_differences(*v.configuration);
        reduced = reduced_equation_residuals(*v.configuration, masses, *potential).max();
    }

    int rc = emit(c, out, err, [&](std::ostream& os) {
        if (format == "json") {
            json doc;
            doc["command"] = "check";
            doc["masses"] = numbers({masses[0], masses[1], masses[2]});
            doc["shape"] = numbers({shape.sigma12, shape.sigma23, shape.sigma31});
            doc["potential"] = c.potential;
            doc["radius"] = number(c.radius);
            doc["rotator"] = v.is_rotator;
            doc["classification"] = std::string(to_string(v.classification));
            doc["residual"] = number(v.residual);
            if (v.configuration) {
                doc["omega_squared"] = number(v.omega_squared);
                doc["r3_omega2"] = number(v.omega_squared_scaled);
                doc["gamma"] = number(v.gamma);
                doc["cos_theta"] = numbers({cos_theta.begin(), cos_theta.end()});
                doc["cos_phi_diff"] = numbers({cos_dphi.begin(), cos_dphi.end()});
                const auto& cfg = *v.configuration;
                doc["theta"] = numbers({cfg.theta.begin(), cfg.theta.end()});
                doc["phi"] = numbers({cfg.phi.begin(), cfg.phi.end()});
                doc["equation_residual"] = number(reduced);
            }
            write_json(os, doc);
        } else {
            CsvTable t;
            t.header = {"rotator", "classification", "r3_omega2", "omega_squared", "gamma", "residual",
                        "cos_theta1", "cos_theta2", "cos_theta3", "cos_phi12", "cos_phi23", "cos_phi31"};
            std::vector<std::string> row{v.is_rotator ? "1" : "0", std::string(to_string(v.classification))};
            for (double x : {v.omega_squared_scaled, v.omega_squared, v.gamma, v.residual})
                row.push_back(format_number(x));
            for (double x : cos_theta)
                row.push_back(v.configuration ? format_number(x) : "");
            for (double x : cos_dphi)
                row.push_back(v.configuration ? format_number(x) : "");
            t.add(std::move(row));
            write_csv(os, t);
        }
    });
    if (rc != kSuccess)
        return rc;
    return v.is_rotator ? kSuccess : kNoRotator;
}

int cmd_isosceles_curve(const Common& c, std::ostream& out, std::ostream& err)
{
    const std::string format = c.format.empty() ? "csv" : c.format;
    require_format(format);
    const FamilyBranch branch = trace_equal_mass_isosceles(c.resolution);
    std::vector<IsoscelesSolution> points;
    for (const auto& p : branch.points) {
        const std::string s12 = format_number(p.sigma12), s = format_number(p.sigma);
        if (passes_as_printed({"1", "1", "1"}, {s12, s, s}))
            points.push_back(p);
    }
    report_dropped(err, branch.points.size() - points.size());
    return emit(c, out, err, [&](std::ostream& os) {
        if (format == "csv") {
            CsvTable t;
            t.header = {"sigma12", "sigma", "r3_omega2", "equilateral"};
            for (const auto& p : points)
                t.add({format_number(p.sigma12), format_number(p.sigma), format_number(p.r3_omega2),
                       p.equilateral ? "1" : "0"});
            write_csv(os, t);
        } else {
            json doc;
            doc["family"] = branch.family;
            doc["points"] = json::array();
            for (const auto& p : points)
                doc["points"].push_back({{"sigma12", number(p.sigma12)},
                                         {"sigma", number(p.sigma)},
                                         {"r3_omega2", number(p.r3_omega2)},
                                         {"equilateral", p.equilateral}});
            write_json(os, doc);
        }
    });
}

int cmd_two_equal_mass(const Common& c, std::ostream& out, std::ostream& err)
{
    const std::string format = c.format.empty() ? "csv" : c.format;
    require_format(format);
    std::vector<TwoEqualMassSolution> curve;
    const auto traced = trace_two_equal_mass(c.resolution, 1.0);
    const std::string right = format_number(0.5 * kPi);
    for (const auto& p : traced) {
        const std::string nu = format_number(p.nu), s = format_number(p.sigma);
        if (passes_as_printed({nu, nu, "1"}, {right, s, s}))
            curve.push_back(p);
    }
    report_dropped(err, traced.size() - curve.size());
    return emit(c, out, err, [&](std::ostream& os) {
        if (format == "csv") {
            CsvTable t;
            t.header = {"sigma", "nu", "r3_omega2", "m1", "m2", "m3"};
            for (const auto& p : curve)
                t.add({format_number(p.sigma), format_number(p.nu), format_number(p.r3_omega2), format_number(p.nu),
                       format_number(p.nu), "1"});
            write_csv(os, t);
        } else {
            json doc;
            doc["family"] = "two-equal-mass";
            doc["points"] = json::array();
            for (const auto& p : curve)
                doc["points"].push_back(
                    {{"sigma", number(p.sigma)}, {"nu", number(p.nu)}, {"r3_omega2", number(p.r3_omega2)}});
            write_json(os, doc);
        }
    });
}

int cmd_special_points(const Common& c, std::ostream& out, std::ostream& err)
{
    const std::string format = c.format.empty() ? "json" : c.format;
    require_format(format);
    const SpecialPoints sp = special_points();
    const NuBand band = two_equal_mass_band();
    const double sigma0 = two_equal_mass_sigma_zero();
    return emit(c, out, err, [&](std::ostream& os) {
        if (format == "json") {
            json doc;
            doc["sigma_s"] = number(sp.sigma_s);
            doc["pi_minus_sigma_s"] = number(sp.pi_minus_sigma_s);
            doc["sigma_e"] = number(sp.sigma_e);
            doc["two_sigma_e"] = number(sp.two_sigma_e);
            doc["right_angle_sigmas"] = numbers(sp.right_angle_sigmas);
            doc["two_equal_mass_sigma_zero"] = number(sigma0);
            doc["nu_band"] = {{"lower", number(band.lower)},
                              {"upper", number(band.upper)},
                              {"sigma_at_lower", number(band.sigma_at_lower)},
                              {"sigma_at_upper", number(band.sigma_at_upper)}};
            write_json(os, doc);
        } else {
            CsvTable t;
            t.header = {"name", "value"};
            t.add({"sigma_s", format_number(sp.sigma_s)});
            t.add({"pi_minus_sigma_s", format_number(sp.pi_minus_sigma_s)});
            t.add({"sigma_e", format_number(sp.sigma_e)});
            t.add({"two_sigma_e", format_number(sp.two_sigma_e)});
            for (std::size_t i = 0; i < sp.right_angle_sigmas.size(); ++i)
                t.add({"right_angle_sigma_" + std::to_string(i + 1), format_number(sp.right_angle_sigmas[i])});
            t.add({"two_equal_mass_sigma_zero", format_number(sigma0)});
            t.add({"nu_band_lower", format_number(band.lower)});
            t.add({"nu_band_upper", format_number(band.upper)});
            t.add({"sigma_at_nu_lower", format_number(band.sigma_at_lower)});
            t.add({"sigma_at_nu_upper", format_number(band.sigma_at_upper)});
            write_csv(os, t);
        }
    });
}

struct VerifyArgs {
    std::string config;
    double periods = 1.0;
    double omega_scale = 1.0;
    double rigidity = 1e-6;
    std::string trajectory;
};

std::array<double, 3> json_triple(const json& doc, const char* key)
{
    if (!doc.contains(key) || !doc[key].is_array() || doc[key].size() != 3)
        throw Error(Errc::InvalidArgument, std::string("config: '") + key + "' must be an array of three numbers");
    std::array<double, 3> r{};
    for (std::size_t i = 0; i < 3; ++i) {
        if (!doc[key][i].is_number())
            throw Error(Errc::InvalidArgument, std::string("config: '") + key + "' must hold numbers");
        r[i] = doc[key][i].get<double>();
    }
    return r;
}

int cmd_verify(Common c, const VerifyArgs& va, std::ostream& out, std::ostream& err)
{
    const std::string format = c.format.empty() ? "json" : c.format;
    require_format(format);
    if (!(va.periods > 0.0))
        throw Error(Errc::InvalidArgument, "--periods must be positive");

    Masses masses;
    Configuration cfg;
    bool have_config = false;

    if (!va.config.empty()) {
        std::ifstream in(va.config);
        if (!in)
            throw Error(Errc::InvalidArgument, "cannot read " + va.config);
        json doc;
        try {
            doc = json::parse(in);
        } catch (const json::exception& e) {
            throw Error(Errc::InvalidArgument, std::string("config: ") + e.what());
        }
        const auto m = json_triple(doc, "masses");
        masses = Masses{m};
        validate(masses);
        if (doc.contains("potential"))
            c.potential = doc["potential"].get<std::string>();
        if (doc.contains("radius"))
            c.radius = doc["radius"].get<double>();
        if (doc.contains("theta")) {
            cfg.theta = json_triple(doc, "theta");
            cfg.phi = json_triple(doc, "phi");
            if (!doc.contains("omega") || !doc["omega"].is_number())
                throw Error(Errc::InvalidArgument, "config: 'omega' is required with theta/phi");
            cfg.omega = doc["omega"].get<double>();
            cfg.radius = c.radius;
            have_config = true;
        } else if (doc.contains("shape")) {
            const auto s = json_triple(doc, "shape");
            c.shape = format_number(s[0]) + "," + format_number(s[1]) + "," + format_number(s[2]);
        } else {
            throw Error(Errc::InvalidArgument, "config: needs theta/phi/omega or shape");
        }
    } else {
        masses = read_masses(c);
    }

    const auto potential = make_potential(c.potential, c.radius);
    if (!have_config) {
        if (c.shape.empty())
            throw Error(Errc::InvalidArgument, "verify needs --config or --masses with --shape");
        Common sc = c;
        if (!va.config.empty())
            sc.degrees = false;
        RotatorOptions opts;
        opts.tolerance = c.tol;
        const RotatorVerdict v = check_rotator(masses, read_shape(sc), *potential, opts);
        if (!v.configuration) {
            err << "not a rotator: nothing to verify\n";
            return kNoRotator;
        }
        cfg = *v.configuration;
    }

    if (!(std::abs(cfg.omega) > 0.0))
        throw Error(Errc::InvalidArgument, "omega must be nonzero to define a rotation period");
    const double omega0 = cfg.omega;
    cfg.omega *= va.omega_scale;
    const double period = 2.0 * kPi / std::abs(omega0);
    const Trajectory traj = integrate(state_from_configuration(cfg), masses, *potential, va.periods * period);

    if (!va.trajectory.empty()) {
        std::ofstream tf(va.trajectory);
        if (!tf) {
            err << "error: cannot open " << va.trajectory << " for writing\n";
            return kInputError;
        }
        write_trajectory_csv(tf, traj);
    }

    const double drift = traj.max_shape_drift();
    const bool rigid = drift <= va.rigidity && traj.max_theta_drift() <= va.rigidity;
    const int rc = emit(c, out, err, [&](std::ostream& os) {
        const std::vector<std::pair<std::string, double>> metrics{
            {"omega", cfg.omega},
            {"period", period},
            {"t_end", traj.samples.back().t},
            {"max_shape_drift", drift},
            {"max_theta_drift", traj.max_theta_drift()},
            {"max_theta_dot", traj.max_theta_dot()},
            {"max_phi_dot_spread", traj.max_phi_dot_spread()},
            {"energy_drift", traj.max_energy_drift()},
            {"momentum_drift", traj.max_momentum_drift()},
        };
        if (format == "json") {
            json doc;
            doc["command"] = "verify";
            doc["steps"] = traj.samples.size() - 1;
            for (const auto& [k, x] : metrics)
                doc[k] = number(x);
            doc["rigid"] = rigid;
            write_json(os, doc);
        } else {
            CsvTable t;
            std::vector<std::string> row;
            for (const auto& [k, x] : metrics) {
                t.header.push_back(k);
                row.push_back(format_number(x));
            }
            t.header.push_back("rigid");
            row.push_back(rigid ? "1" : "0");
            t.add(std::move(row));
            write_csv(os, t);
        }
    });
    if (rc != kSuccess)
        return rc;
    return rigid ? kSuccess : kNoRotator;
}

void add_shape_options(CLI::App* sub, Common& c)
{
    sub->add_option("--masses", c.masses, "masses as a,b,c");
    sub->add_option("--shape", c.shape, "arc angles as s12,s23,s31 (radians)");
    sub->add_option("--potential", c.potential, "cotangent or harmonic-test")
        ->check(CLI::IsMember({"cotangent", "harmonic-test"}));
    sub->add_option("--radius", c.radius, "sphere radius")->check(CLI::PositiveNumber);
    sub->add_option("--tol", c.tol, "rotator tolerance")->check(CLI::PositiveNumber);
    sub->add_flag("--degrees", c.degrees, "read --shape in degrees");
}

void add_output_options(CLI::App* sub, Common& c)
{
    sub->add_option("--out", c.out, "output file (default stdout)");
    sub->add_option("--format", c.format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Rigid rotators of three bodies on a sphere", args.empty() ? "s2re" : args.front()};
    app.require_subcommand(1);

    Common c;
    VerifyArgs va;

    auto* check = app.add_subcommand("check", "test a shape for a rigid rotator");
    add_shape_options(check, c);
    add_output_options(check, c);
    check->get_option("--masses")->required();
    check->get_option("--shape")->required();

    auto* iso = app.add_subcommand("isosceles-curve", "equal-mass isosceles rotators over sigma12");
    iso->add_option("--resolution", c.resolution, "grid points")->check(CLI::PositiveNumber);
    add_output_options(iso, c);

    auto* two = app.add_subcommand("two-equal-mass", "masses (nu, nu, 1) with a right angle between the pair");
    two->add_option("--resolution", c.resolution, "grid points")->check(CLI::PositiveNumber);
    add_output_options(two, c);

    auto* verify = app.add_subcommand("verify", "integrate a rotator and measure its drift");
    add_shape_options(verify, c);
    add_output_options(verify, c);
    verify->add_option("--config", va.config, "JSON file with masses and theta/phi/omega or shape")
        ->check(CLI::ExistingFile);
    verify->add_option("--periods", va.periods, "rotation periods to integrate");
    verify->add_option("--omega-scale", va.omega_scale, "multiply omega before integrating");
    verify->add_option("--rigidity", va.rigidity, "allowed drift of arcs and colatitudes");
    verify->add_option("--trajectory", va.trajectory, "write the trajectory CSV here");

    auto* special = app.add_subcommand("special-points", "distinguished points of both families");
    add_output_options(special, c);

    std::vector<const char*> argv;
    for (const auto& a : args)
        argv.push_back(a.c_str());
    if (argv.empty())
        argv.push_back("s2re");

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        return app.exit(e, out, err) == 0 ? kSuccess : kInputError;
    }

    try {
        if (check->parsed())
            return cmd_check(c, out, err);
        if (iso->parsed())
            return cmd_isosceles_curve(c, out, err);
        if (two->parsed())
            return cmd_two_equal_mass(c, out, err);
        if (verify->parsed())
            return cmd_verify(c, va, out, err);
        if (special->parsed())
            return cmd_special_points(c, out, err);
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return exit_code_for(e.code());
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kNumericalFailure;
    }
    return kInputError;
}

} // namespace s2re::cli
