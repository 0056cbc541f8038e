#include "app/run.hpp"

#include <cmath>
#include <filesystem>
#include <fstream>
#include <limits>
#include <numbers>

#include "app/io.hpp"
#include "thinscat/emfields.hpp"
#include "thinscat/medium.hpp"
#include "thinscat/multi.hpp"
#include "thinscat/single.hpp"

namespace thinscat::app {
namespace {

using nlohmann::json;

constexpr double pi = std::numbers::pi;
constexpr double nan = std::numeric_limits<double>::quiet_NaN();

json to_json(Complex z)
{
    return {{"re", z.real()}, {"im", z.imag()}};
}

std::string path_in(ExperimentConfig const& c, char const* name)
{
    return (std::filesystem::path(c.output_dir) / name).string();
}

json wave_summary(WaveParams const& wp)
{
    return {{"k", wp.k()}, {"kappa", wp.kappa()}, {"k3", wp.k3()}, {"xi", to_json(wp.xi())}, {"n0_sq", wp.n0_sq()}};
}

// Least-squares slope of log y against log x.
double fitted_slope(std::vector<double> const& x, std::vector<double> const& y)
{
    double const n = double(x.size());
    double sx = 0.0;
    double sy = 0.0;
    double sxx = 0.0;
    double sxy = 0.0;
    for (std::size_t k = 0; k < x.size(); ++k)
    {
        double const lx = std::log(x[k]);
        double const ly = std::log(y[k]);
        sx += lx;
        sy += ly;
        sxx += lx * lx;
        sxy += lx * ly;
    }
    return (n * sxy - sx * sy) / (n * sxx - sx * sx);
}

// Samples value(p) on the output lattice; points where it throws
// SingularityError (inside a cylinder) hold nan.
template <typename F>
FieldTable sample_grid(OutputGrid const& grid, F value, std::size_t* skipped = nullptr)
{
    FieldTable t;
    t.rect = grid.rect;
    t.nx = grid.nx;
    t.ny = grid.ny;
    t.cell_centered = false;
    std::size_t missing = 0;
    for (std::size_t j = 0; j < grid.ny; ++j)
    {
        for (std::size_t i = 0; i < grid.nx; ++i)
        {
            Point2 const p = grid.node(i, j);
            t.points.push_back(p);
            try
            {
                t.values.push_back(value(p));
            }
            catch (SingularityError const&)
            {
                t.values.push_back({nan, nan});
                ++missing;
            }
        }
    }
    if (skipped != nullptr)
    {
        *skipped = missing;
    }
    return t;
}

// Rows "x y" followed by re/im of E1 E2 E3 H1 H2 H3.
template <typename F>
void write_em_grid(std::string const& path, OutputGrid const& grid, WaveParams const& wp, F sample)
{
    std::ofstream out(path);
    if (!out)
    {
        throw InvalidArgument("cannot write '" + path + "'");
    }
    out << "# rect " << format_double(grid.rect.xmin) << " " << format_double(grid.rect.xmax) << " "
        << format_double(grid.rect.ymin) << " " << format_double(grid.rect.ymax) << "\n";
    out << "# shape " << grid.nx << " " << grid.ny << "\n";
    out << "# layout nodes\n";
    out << "# z " << format_double(grid.z) << "\n";
    out << "# x y E1re E1im E2re E2im E3re E3im H1re H1im H2re H2im H3re H3im\n";
    for (std::size_t j = 0; j < grid.ny; ++j)
    {
        for (std::size_t i = 0; i < grid.nx; ++i)
        {
            Point2 const p = grid.node(i, j);
            EMField f;
            bool defined = true;
            try
            {
                f = reconstruct_EH(wp, sample(p));
            }
            catch (SingularityError const&)
            {
                defined = false;
            }
            out << format_double(p.x) << " " << format_double(p.y);
            for (Vec3c const* v : {&f.E, &f.H})
            {
                for (Complex c : *v)
                {
                    out << " " << format_double(defined ? c.real() : nan) << " "
                        << format_double(defined ? c.imag() : nan);
                }
            }
            out << "\n";
        }
    }
}

json run_single(ExperimentConfig const& c, WaveParams const& wp)
{
    auto const cyl = Cylinder::make(c.single.center, c.single.a);
    Complex const u_center = incident_u0(wp, cyl.center);
    Complex const q_asym = charge_asymptotic(wp, cyl, u_center);
    auto const modal = modal_solution_exact(wp, cyl);
    auto const density = boundary_density_exact(wp, cyl);

    std::size_t skipped = 0;
    auto const table = sample_grid(c.grid, [&](Point2 p) { return scattered_field_single(wp, cyl, p); }, &skipped);
    write_field_table(path_in(c, "field.txt"), table);

    double field_error = 0.0;
    for (std::size_t k = 0; k < table.points.size(); ++k)
    {
        if (std::isnan(table.values[k].real()))
        {
            continue;
        }
        Complex const exact = modal.total(wp, table.points[k]);
        field_error = std::max(field_error, std::abs(table.values[k] - exact) / std::abs(exact));
    }

    if (c.grid.em)
    {
        write_em_grid(path_in(c, "em.txt"), c.grid, wp, [&](Point2 p) {
            return ScalarSample{scattered_field_single(wp, cyl, p), scattered_field_single_grad(wp, cyl, p), p,
                                c.grid.z};
        });
    }

    std::vector<double> radii;
    for (double r : {50.0, 100.0, 200.0, 400.0})
    {
        radii.push_back(r / wp.kappa());
    }
    auto const decay = radiation_decay_check(
        [&](Point2 p) { return scattered_field_single(wp, cyl, p) - incident_u0(wp, p); }, wp, radii, cyl.center);

    return {{"a", cyl.radius},
            {"center", {cyl.center.x, cyl.center.y}},
            {"Q_asymptotic", to_json(q_asym)},
            {"Q_boundary_equation", to_json(density.charge)},
            {"Q_modal", to_json(modal.charge())},
            {"charge_ratio_deviation", std::abs(density.charge / q_asym - 1.0)},
            {"modal_nmax", modal.nmax},
            {"modal_converged", modal.converged},
            {"max_relative_field_error_vs_modal", field_error},
            {"grid_points_inside_cylinder", skipped},
            {"decay_exponent", decay.exponent},
            {"radiation_residual", decay.radiation_residual}};
}

json run_multi(ExperimentConfig const& c, WaveParams const& wp)
{
    ScattererSet const set
        = c.multi.layout == "file"
              ? read_scatterers(c.multi.centers_file)
              : jittered_grid({c.multi.region.xmin, c.multi.region.ymin}, {c.multi.region.xmax, c.multi.region.ymax},
                              c.multi.nx, c.multi.ny, c.multi.a, c.multi.d, c.seed);
    SolveOptions options;
    options.method = c.multi.method == "fixed_point" ? SolveMethod::fixed_point : SolveMethod::lu;
    options.max_scatterers = c.multi.max_scatterers;
    auto const sol = solve_effective(wp, set, options);

    write_scatterers(path_in(c, "scatterers.txt"), set);
    {
        std::ofstream out(path_in(c, "effective.txt"));
        out << "# x y re(u_e) im(u_e)\n";
        for (std::size_t m = 0; m < set.size(); ++m)
        {
            out << format_double(set.center(m).x) << " " << format_double(set.center(m).y) << " "
                << format_double(sol.u_e[m].real()) << " " << format_double(sol.u_e[m].imag()) << "\n";
        }
    }

    std::size_t skipped = 0;
    std::size_t near = 0;
    auto const table = sample_grid(
        c.grid,
        [&](Point2 p) {
            FieldValue const v = total_field(wp, set, sol, p);
            near += v.near_scatterer ? 1 : 0;
            return v.value;
        },
        &skipped);
    write_field_table(path_in(c, "field.txt"), table);

    if (c.grid.em)
    {
        write_em_grid(path_in(c, "em.txt"), c.grid, wp, [&](Point2 p) {
            return ScalarSample{total_field(wp, set, sol, p).value, total_field_grad(wp, set, sol, p), p, c.grid.z};
        });
    }

    double coupling = 0.0;
    Complex total_charge;
    for (std::size_t m = 0; m < set.size(); ++m)
    {
        coupling = std::max(coupling, std::abs(sol.u_e[m] - incident_u0(wp, set.center(m))));
        total_charge += sol.Q[m];
    }

    json summary{{"M", set.size()},
                 {"a", set.radius()},
                 {"d", set.min_separation()},
                 {"method", sol.method_used == SolveMethod::lu ? "lu" : "fixed_point"},
                 {"iterations", sol.iterations},
                 {"residual", sol.residual},
                 {"rhs_norm", sol.rhs_norm},
                 {"rcond", sol.rcond},
                 {"max_abs_ue_minus_u0", coupling},
                 {"total_charge", to_json(total_charge)},
                 {"grid_points_inside_cylinders", skipped},
                 {"grid_points_near_cylinders", near}};
    if (!set.empty())
    {
        try
        {
            auto const est = correction_diagnostic(wp, set, sol, c.multi.probe);
            summary["correction"] = {{"probe", {c.multi.probe.x, c.multi.probe.y}},
                                     {"ratio", est.degenerate ? json(nullptr) : json(est.ratio)},
                                     {"sigma1", est.sigma1},
                                     {"sigma2", est.sigma2},
                                     {"degenerate", est.degenerate}};
        }
        catch (SingularityError const&)
        {
            summary["correction"] = {{"probe", {c.multi.probe.x, c.multi.probe.y}}, {"error", "probe inside a cylinder"}};
        }
    }
    return summary;
}

json run_medium(ExperimentConfig const& c, WaveParams const& wp)
{
    auto const density = c.medium.density();
    std::size_t const nx = c.medium.cells;
    std::size_t const ny = c.medium.cells_y();
    auto const u = nystrom_solve(wp, density, {nx, ny});
    write_field_table(path_in(c, "nystrom.txt"), to_table(u));

    std::size_t const margin = c.medium.margin > 0 ? c.medium.margin : std::max<std::size_t>(2, std::min(nx, ny) / 4);
    auto const residual = pde_residual(wp, density, u, margin);

    Rect const& d = c.medium.domain;
    Point2 const middle{0.5 * (d.xmin + d.xmax), 0.5 * (d.ymin + d.ymax)};
    auto const refr = refraction(wp, density(middle));

    json summary{{"cells", {nx, ny}},
                 {"h", u.h()},
                 {"solve_residual", u.solve_residual},
                 {"pde_residual", residual.max_residual},
                 {"pde_margin_nodes", margin},
                 {"density_integral_over_2pi", density.integral(d) / (2.0 * pi)},
                 {"refraction_at_center",
                  {{"N", refr.N}, {"n_sq", to_json(refr.n_sq)}, {"kappa_N_sq", to_json(refr.kappa_N_sq)}}}};

    if (c.medium.a > 0.0)
    {
        DistributionOptions options;
        options.cell_scale = c.medium.cell_scale;
        options.separation_coefficient = c.medium.separation_coefficient;
        auto const set = distribute_centers(density, c.medium.a, c.seed, options);
        auto const sol = solve_effective(wp, set);
        write_scatterers(path_in(c, "scatterers.txt"), set);
        double gap = 0.0;
        for (std::size_t m = 0; m < set.size(); ++m)
        {
            gap = std::max(gap, std::abs(sol.u_e[m] - interpolate_bicubic(u, set.center(m))));
        }
        summary["comparison"] = {{"a", c.medium.a},
                                 {"M", set.size()},
                                 {"M_expected", density.integral(d) / (2.0 * pi * c.medium.a)},
                                 {"d", set.min_separation()},
                                 {"solve_residual", sol.residual},
                                 {"max_abs_ue_minus_nystrom", gap}};
    }
    return summary;
}

json run_design(ExperimentConfig const& c, WaveParams const& wp)
{
    double const n = design_density(wp, c.design.target_n_sq);
    auto const check = refraction(wp, n);
    return {{"target_n_sq", to_json(c.design.target_n_sq)},
            {"N", n},
            {"achieved_n_sq", to_json(check.n_sq)},
            {"relative_error", std::abs(check.n_sq - c.design.target_n_sq) / std::abs(c.design.target_n_sq)},
            {"kappa_N_sq", to_json(check.kappa_N_sq)}};
}

json run_converge(ExperimentConfig const& c, WaveParams const& wp)
{
    std::vector<double> as;
    std::vector<double> errors;
    std::vector<double> deviations;
    std::ofstream out(path_in(c, "converge.txt"));
    out << "# a field_error charge_deviation\n";
    for (double a : c.converge.a_values)
    {
        auto const cyl = Cylinder::make({0.0, 0.0}, a);
        auto const modal = modal_solution_exact(wp, cyl);
        double worst = 0.0;
        for (int k = 0; k < c.converge.directions; ++k)
        {
            double const t = 2.0 * pi * k / c.converge.directions;
            Point2 const p{c.converge.radius * std::cos(t), c.converge.radius * std::sin(t)};
            Complex const exact = modal.total(wp, p);
            worst = std::max(worst, std::abs(scattered_field_single(wp, cyl, p) - exact) / std::abs(exact));
        }
        double const deviation
            = std::abs(boundary_density_exact(wp, cyl).charge / charge_asymptotic(wp, cyl, 1.0) - 1.0);
        as.push_back(a);
        errors.push_back(worst);
        deviations.push_back(deviation);
        out << format_double(a) << " " << format_double(worst) << " " << format_double(deviation) << "\n";
    }
    bool monotone = true;
    for (std::size_t k = 1; k < errors.size(); ++k)
    {
        monotone = monotone && errors[k] < errors[k - 1];
    }
    return {{"a", as},
            {"field_error", errors},
            {"charge_deviation", deviations},
            {"field_error_slope", fitted_slope(as, errors)},
            {"charge_deviation_slope", fitted_slope(as, deviations)},
            {"monotone", monotone}};
}

}  // namespace

json run(ExperimentConfig const& config)
{
    validate(config);
    WaveParams const wp = config.wave.params();
    std::filesystem::create_directories(config.output_dir);
    {
        std::ofstream manifest(path_in(config, "manifest.ini"));
        if (!manifest)
        {
            throw InvalidArgument("cannot write into output directory '" + config.output_dir + "'");
        }
        manifest << write_config(config);
    }

    json summary{{"mode", to_string(config.mode)}, {"seed", config.seed}, {"wave", wave_summary(wp)}};
    switch (config.mode)
    {
    case Mode::single: summary["result"] = run_single(config, wp); break;
    case Mode::multi: summary["result"] = run_multi(config, wp); break;
    case Mode::medium: summary["result"] = run_medium(config, wp); break;
    case Mode::design: summary["result"] = run_design(config, wp); break;
    case Mode::converge: summary["result"] = run_converge(config, wp); break;
    }

    std::ofstream out(path_in(config, "summary.json"));
    out << summary.dump(2) << "\n";
    return summary;
}

int exit_code_for(std::exception const& error)
{
    if (dynamic_cast<InfeasibleTarget const*>(&error) != nullptr)
    {
        return 4;
    }
    if (dynamic_cast<SingularityError const*>(&error) != nullptr
        || dynamic_cast<NumericalError const*>(&error) != nullptr)
    {
        return 3;
    }
    if (dynamic_cast<InvalidArgument const*>(&error) != nullptr
        || dynamic_cast<std::filesystem::filesystem_error const*>(&error) != nullptr)
    {
        return 2;
    }
    return 3;
}

}  // namespace thinscat::app
