#include "thinscat/multi.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <numeric>
#include <string>

#include "thinscat/error.hpp"
#include "thinscat/parallel.hpp"
#include "thinscat/random.hpp"
#include "thinscat/single.hpp"

namespace thinscat {
namespace {

constexpr Complex I{0.0, 1.0};
constexpr double pi = std::numbers::pi;

// Coupling constant i 2 pi a xi shared by the system, charges and fields.
Complex coupling(WaveParams const& wp, ScattererSet const& set)
{
    return I * 2.0 * pi * set.radius() * wp.xi();
}

void require_solution_shape(ScattererSet const& set, MultiSolution const& sol)
{
    if (sol.u_e.size() != set.size())
    {
        throw InvalidArgument("solution size does not match the scatterer set");
    }
}

// Throws for p within a of a center; flags p within 3a.
bool check_exclusion(ScattererSet const& set, Point2 p, std::size_t skip)
{
    bool near = false;
    double const a = set.radius();
    for (std::size_t m = 0; m < set.size(); ++m)
    {
        if (m == skip)
        {
            continue;
        }
        double const r = distance(p, set.center(m));
        if (!(r > a))
        {
            throw SingularityError("field evaluation inside cylinder " + std::to_string(m));
        }
        near = near || r <= 3.0 * a;
    }
    return near;
}

}  // namespace

ScattererSet ScattererSet::make(std::vector<Point2> centers, double radius,
                                double min_separation, double separation_ratio)
{
    if (!(radius > 0.0) || !std::isfinite(radius))
    {
        throw InvalidArgument("scatterer radius must be positive");
    }
    if (!(min_separation > 2.0 * radius) || !(min_separation >= separation_ratio * radius))
    {
        throw InvalidArgument("min_separation d = " + std::to_string(min_separation)
                              + " must exceed 2a and satisfy d >= "
                              + std::to_string(separation_ratio) + " a");
    }
    for (Point2 const& c : centers)
    {
        if (!std::isfinite(c.x) || !std::isfinite(c.y))
        {
            throw InvalidArgument("scatterer centers must be finite");
        }
    }

    // Sweep in x order; only pairs closer than d in x need a distance check.
    std::vector<std::size_t> order(centers.size());
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::sort(order.begin(), order.end(),
              [&](std::size_t i, std::size_t j) { return centers[i].x < centers[j].x; });
    // Small slack so sets generated exactly at spacing d are accepted.
    double const limit = min_separation * (1.0 - 1e-12);
    for (std::size_t s = 0; s < order.size(); ++s)
    {
        Point2 const left = centers[order[s]];
        for (std::size_t t = s + 1; t < order.size(); ++t)
        {
            Point2 const right = centers[order[t]];
            if (right.x - left.x >= limit)
            {
                break;
            }
            if (distance(left, right) < limit)
            {
                throw InvalidArgument("centers " + std::to_string(order[s]) + " and "
                                      + std::to_string(order[t])
                                      + " are closer than min_separation");
            }
        }
    }

    ScattererSet set;
    set.centers_ = std::move(centers);
    set.radius_ = radius;
    set.min_separation_ = min_separation;
    return set;
}

ScattererSet ScattererSet::permuted(std::span<std::size_t const> perm) const
{
    if (perm.size() != centers_.size())
    {
        throw InvalidArgument("permutation size mismatch");
    }
    ScattererSet out = *this;
    for (std::size_t m = 0; m < perm.size(); ++m)
    {
        out.centers_[m] = centers_.at(perm[m]);
    }
    return out;
}

ScattererSet jittered_grid(Point2 lower, Point2 upper, std::size_t nx, std::size_t ny,
                           double radius, double min_separation, std::uint64_t seed)
{
    if (nx == 0 || ny == 0 || !(upper.x > lower.x) || !(upper.y > lower.y))
    {
        throw InvalidArgument("jittered_grid: empty grid");
    }
    double const hx = (upper.x - lower.x) / double(nx);
    double const hy = (upper.y - lower.y) / double(ny);
    if (min_separation > std::min(hx, hy))
    {
        throw CapacityError("jittered_grid: cells smaller than min_separation");
    }
    double const jx = 0.5 * (hx - min_separation);
    double const jy = 0.5 * (hy - min_separation);
    std::vector<Point2> centers;
    centers.reserve(nx * ny);
    for (std::size_t j = 0; j < ny; ++j)
    {
        for (std::size_t i = 0; i < nx; ++i)
        {
            std::uint64_t const cell = j * nx + i;
            double const ux = 2.0 * uniform01(seed, cell, 0) - 1.0;
            double const uy = 2.0 * uniform01(seed, cell, 1) - 1.0;
            centers.push_back({lower.x + (double(i) + 0.5) * hx + ux * jx,
                               lower.y + (double(j) + 0.5) * hy + uy * jy});
        }
    }
    return ScattererSet::make(std::move(centers), radius, min_separation);
}

LinearSystem assemble_system(WaveParams const& wp, ScattererSet const& set)
{
    std::size_t const m = set.size();
    LinearSystem sys{ComplexMatrix(m, m), ComplexVector(m)};
    Complex const c = coupling(wp, set);
    double const kappa = wp.kappa();
    auto centers = set.centers();
    parallel_for(m, [&](std::size_t j) {
        sys.rhs(j) = incident_u0(wp, centers[j]);
        for (std::size_t k = 0; k < m; ++k)
        {
            sys.matrix(j, k) = (j == k) ? Complex{1.0, 0.0}
                                        : -c * green(kappa, centers[j], centers[k]);
        }
    });
    return sys;
}

MultiSolution solve_effective(WaveParams const& wp, ScattererSet const& set,
                              SolveOptions const& options)
{
    if (set.size() > options.max_scatterers)
    {
        throw CapacityError("solve_effective: M = " + std::to_string(set.size())
                            + " exceeds the cap of " + std::to_string(options.max_scatterers)
                            + " (dense matrix needs 16 M^2 bytes)");
    }
    LinearSystem const sys = assemble_system(wp, set);
    MultiSolution sol;
    sol.rhs_norm = sys.rhs.norm();
    ComplexVector u;

    bool solved = false;
    if (options.method == SolveMethod::fixed_point && set.size() > 0)
    {
        u = sys.rhs;
        for (int it = 1; it <= options.fixed_point_max_iterations; ++it)
        {
            ComplexVector const next = u + (sys.rhs - sys.matrix * u);
            if (!next.allFinite())
            {
                break;
            }
            double const change = (next - u).norm();
            u = next;
            sol.iterations = it;
            if (change <= options.fixed_point_tolerance * u.norm())
            {
                solved = true;
                break;
            }
        }
        if (solved)
        {
            sol.method_used = SolveMethod::fixed_point;
            sol.residual = (sys.matrix * u - sys.rhs).norm();
        }
    }
    if (!solved)
    {
        DenseSolveResult const res = solve_dense(sys.matrix, sys.rhs);
        u = res.x;
        sol.residual = res.residual;
        sol.rcond = res.rcond;
        sol.method_used = SolveMethod::lu;
    }

    Complex const c = coupling(wp, set);
    sol.u_e.assign(u.data(), u.data() + u.size());
    sol.Q.resize(sol.u_e.size());
    std::transform(sol.u_e.begin(), sol.u_e.end(), sol.Q.begin(),
                   [c](Complex ue) { return c * ue; });
    return sol;
}

FieldValue total_field(WaveParams const& wp, ScattererSet const& set, MultiSolution const& sol,
                       Point2 p)
{
    require_solution_shape(set, sol);
    FieldValue out;
    out.near_scatterer = check_exclusion(set, p, set.size());
    Complex sum;
    for (std::size_t m = 0; m < set.size(); ++m)
    {
        sum += green(wp.kappa(), p, set.center(m)) * sol.u_e[m];
    }
    out.value = incident_u0(wp, p) + coupling(wp, set) * sum;
    return out;
}

Gradient total_field_grad(WaveParams const& wp, ScattererSet const& set,
                          MultiSolution const& sol, Point2 p)
{
    require_solution_shape(set, sol);
    check_exclusion(set, p, set.size());
    Gradient grad = incident_u0_grad(wp, p);
    Complex const c = coupling(wp, set);
    for (std::size_t m = 0; m < set.size(); ++m)
    {
        Gradient const g = green_grad(wp.kappa(), p, set.center(m));
        grad[0] += c * g[0] * sol.u_e[m];
        grad[1] += c * g[1] * sol.u_e[m];
    }
    return grad;
}

FieldValue effective_field_at(WaveParams const& wp, ScattererSet const& set,
                              MultiSolution const& sol, std::size_t j, Point2 p)
{
    require_solution_shape(set, sol);
    if (j >= set.size())
    {
        throw InvalidArgument("effective_field_at: index out of range");
    }
    FieldValue out;
    out.near_scatterer = check_exclusion(set, p, j);
    Complex sum;
    for (std::size_t m = 0; m < set.size(); ++m)
    {
        if (m != j)
        {
            sum += green(wp.kappa(), p, set.center(m)) * sol.u_e[m];
        }
    }
    out.value = incident_u0(wp, p) + coupling(wp, set) * sum;
    return out;
}

CorrectionEstimate correction_diagnostic(WaveParams const& wp, ScattererSet const& set,
                                         MultiSolution const& sol, Point2 p, int circle_points)
{
    require_solution_shape(set, sol);
    if (circle_points < 4)
    {
        throw InvalidArgument("correction_diagnostic: need at least 4 circle points");
    }
    check_exclusion(set, p, set.size());
    double const a = set.radius();
    double const kappa = wp.kappa();
    Complex sigma1;
    double sigma2 = 0.0;
    for (std::size_t m = 0; m < set.size(); ++m)
    {
        Point2 const xm = set.center(m);
        Complex const g_center = green(kappa, p, xm);
        sigma1 += g_center * sol.Q[m];
        // Periodic trapezoidal rule on the circle, dt = a dphi.
        double integral = 0.0;
        for (int k = 0; k < circle_points; ++k)
        {
            double const phi = 2.0 * pi * k / circle_points;
            Point2 const t{xm.x + a * std::cos(phi), xm.y + a * std::sin(phi)};
            integral += std::abs(green(kappa, p, t) - g_center);
        }
        integral *= 2.0 * pi * a / circle_points;
        sigma2 += std::abs(sol.Q[m]) / (2.0 * pi * a) * integral;
    }
    CorrectionEstimate out;
    out.sigma1 = std::abs(sigma1);
    out.sigma2 = sigma2;
    if (out.sigma1 == 0.0)
    {
        out.degenerate = true;
        out.ratio = std::numeric_limits<double>::infinity();
        return out;
    }
    out.ratio = sigma2 / out.sigma1;
    return out;
}

}  // namespace thinscat
