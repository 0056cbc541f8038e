#include "thinscat/medium.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <map>
#include <numbers>
#include <numeric>
#include <string>

#include <boost/math/quadrature/gauss.hpp>

#include "thinscat/error.hpp"
#include "thinscat/parallel.hpp"
#include "thinscat/random.hpp"
#include "thinscat/single.hpp"
#include "thinscat/specfun.hpp"

namespace thinscat {
namespace {

constexpr Complex I{0.0, 1.0};
constexpr double pi = std::numbers::pi;

struct Node
{
    double x;
    double w;
};

// Full Gauss-Legendre rule on [0, 1] from boost's half-rule tables.
template <unsigned Points>
std::vector<Node> gauss_unit()
{
    using Rule = boost::math::quadrature::gauss<double, Points>;
    auto const& abscissa = Rule::abscissa();
    auto const& weights = Rule::weights();
    std::vector<Node> rule;
    for (std::size_t k = 0; k < abscissa.size(); ++k)
    {
        double const x = abscissa[k];
        double const w = weights[k];
        if (x == 0.0)
        {
            rule.push_back({0.5, 0.5 * w});
            continue;
        }
        rule.push_back({0.5 * (1.0 - x), 0.5 * w});
        rule.push_back({0.5 * (1.0 + x), 0.5 * w});
    }
    return rule;
}

std::vector<Node> const& gauss4()
{
    static std::vector<Node> const rule = gauss_unit<4>();
    return rule;
}

std::vector<Node> const& gauss8()
{
    static std::vector<Node> const rule = gauss_unit<8>();
    return rule;
}

std::vector<Node> const& gauss16()
{
    static std::vector<Node> const rule = gauss_unit<16>();
    return rule;
}

// Lagrange weights at t for nodes 0, 1, 2, 3.
std::array<double, 4> cubic_weights(double t)
{
    return {-(t - 1.0) * (t - 2.0) * (t - 3.0) / 6.0, t * (t - 2.0) * (t - 3.0) / 2.0,
            -t * (t - 1.0) * (t - 3.0) / 2.0, t * (t - 1.0) * (t - 2.0) / 6.0};
}

// Diagonal weight: int over the disc of area h^2 of alpha + ln(1/r)/(2 pi).
Complex self_cell_weight(double kappa, double h)
{
    double const rho = h / std::sqrt(pi);
    return h * h * alpha_standard(kappa) + h * h / (2.0 * pi) * (std::log(1.0 / rho) + 0.5);
}

double wrap01(double t)
{
    return t - std::floor(t);
}

// Rank-1 lattice {(k/n, k g/n mod 1)} on a wx x wy torus.
struct Lattice
{
    std::size_t generator = 1;
    double min_distance = 0.0;  //!< smallest torus distance between points
};

// Coprime generator maximizing the minimum torus distance; O(n^2) per
// candidate.
Lattice best_lattice(std::size_t n, double wx, double wy)
{
    Lattice best;
    if (n == 1)
    {
        best.min_distance = std::numeric_limits<double>::infinity();
        return best;
    }
    for (std::size_t g = 1; g < n; ++g)
    {
        // Coprime generators make k g mod n a permutation: one point per row.
        if (std::gcd(g, n) != 1)
        {
            continue;
        }
        // Distances from point 0 suffice: the lattice is a group.
        double dmin = std::numeric_limits<double>::infinity();
        for (std::size_t k = 1; k < n; ++k)
        {
            double du = double(k) / double(n);
            double dv = double((k * g) % n) / double(n);
            du = std::min(du, 1.0 - du) * wx;
            dv = std::min(dv, 1.0 - dv) * wy;
            dmin = std::min(dmin, std::hypot(du, dv));
        }
        if (dmin > best.min_distance)
        {
            best.generator = g;
            best.min_distance = dmin;
        }
    }
    return best;
}

// Round nx x ny expected counts to integers by error diffusion (serpentine
// Floyd-Steinberg). Weights falling outside the grid are renormalized onto
// the remaining neighbors, so the total is off by at most 1/2.
std::vector<std::size_t> diffuse_round(std::vector<double> values, std::size_t nx, std::size_t ny)
{
    std::vector<std::size_t> out(values.size(), 0);
    for (std::size_t j = 0; j < ny; ++j)
    {
        bool const forward = j % 2 == 0;
        for (std::size_t step = 0; step < nx; ++step)
        {
            std::size_t const i = forward ? step : nx - 1 - step;
            double const v = values[j * nx + i];
            double const n = std::max(0.0, std::round(v));
            out[j * nx + i] = std::size_t(n);
            double const err = v - n;

            long const dir = forward ? 1 : -1;
            struct Target
            {
                long di;
                long dj;
                double w;
            };
            std::array<Target, 4> const targets{
                Target{dir, 0, 7.0}, Target{-dir, 1, 3.0}, Target{0, 1, 5.0}, Target{dir, 1, 1.0}};
            double total = 0.0;
            auto inside = [&](Target const& t) {
                long const ti = long(i) + t.di;
                long const tj = long(j) + t.dj;
                return ti >= 0 && ti < long(nx) && tj < long(ny);
            };
            for (Target const& t : targets)
            {
                total += inside(t) ? t.w : 0.0;
            }
            if (total == 0.0)
            {
                continue;
            }
            for (Target const& t : targets)
            {
                if (inside(t))
                {
                    values[std::size_t(long(j) + t.dj) * nx + std::size_t(long(i) + t.di)]
                        += err * t.w / total;
                }
            }
        }
    }
    return out;
}

constexpr std::size_t profile_samples = 256;
constexpr std::size_t phase_candidates = 32;

// Adds #{k : frac((k + 1/2)/n + shift) < v} - n v at v_q = (q + 1/2) / samples.
void add_marginal_error(std::vector<double>& profile, std::size_t n, double shift)
{
    std::vector<double> pos(n);
    for (std::size_t k = 0; k < n; ++k)
    {
        pos[k] = wrap01((double(k) + 0.5) / double(n) + shift);
    }
    std::sort(pos.begin(), pos.end());
    std::size_t below = 0;
    for (std::size_t q = 0; q < profile.size(); ++q)
    {
        double const v = (double(q) + 0.5) / double(profile.size());
        while (below < n && pos[below] < v)
        {
            ++below;
        }
        profile[q] += double(below) - double(n) * v;
    }
}

// Candidate shifts whole/n + (c + 1/2)/(C n), best first by the resulting
// max |profile|.
std::vector<double> ranked_phases(std::vector<double> const& profile, std::size_t n, double whole)
{
    std::vector<std::pair<double, double>> scored;
    std::vector<double> trial(profile.size());
    for (std::size_t c = 0; c < phase_candidates; ++c)
    {
        double const shift
            = (whole + (double(c) + 0.5) / double(phase_candidates)) / double(n);
        std::fill(trial.begin(), trial.end(), 0.0);
        add_marginal_error(trial, n, shift);
        double worst = 0.0;
        for (std::size_t q = 0; q < profile.size(); ++q)
        {
            worst = std::max(worst, std::abs(profile[q] + trial[q]));
        }
        scored.emplace_back(worst, shift);
    }
    std::stable_sort(scored.begin(), scored.end(),
                     [](auto const& l, auto const& r) { return l.first < r.first; });
    std::vector<double> out;
    out.reserve(scored.size());
    for (auto const& entry : scored)
    {
        out.push_back(entry.second);
    }
    return out;
}

// True when no point of trial lies within d of a point already placed in
// the 3 x 3 block of squares around (i, j).
bool clear_of_neighbors(std::vector<Point2> const& trial,
                        std::vector<std::vector<Point2>> const& placed, std::size_t i,
                        std::size_t j, std::size_t nx, std::size_t ny, double d)
{
    for (std::size_t nj = j > 0 ? j - 1 : 0; nj <= std::min(j + 1, ny - 1); ++nj)
    {
        for (std::size_t ni = i > 0 ? i - 1 : 0; ni <= std::min(i + 1, nx - 1); ++ni)
        {
            for (Point2 const& q : placed[nj * nx + ni])
            {
                for (Point2 const& p : trial)
                {
                    if (distance(p, q) < d)
                    {
                        return false;
                    }
                }
            }
        }
    }
    return true;
}

}  // namespace

//---------------------------------------------------------------------------//

DensityField DensityField::make(Rect domain, Sampler density, double max_jump)
{
    if (!(domain.xmax > domain.xmin) || !(domain.ymax > domain.ymin))
    {
        throw InvalidArgument("density domain must have positive area");
    }
    if (!density)
    {
        throw InvalidArgument("density sampler is empty");
    }
    constexpr int samples = 64;
    std::vector<double> grid(samples * samples);
    for (int j = 0; j < samples; ++j)
    {
        for (int i = 0; i < samples; ++i)
        {
            Point2 const p{domain.xmin + (i + 0.5) * domain.width() / samples,
                           domain.ymin + (j + 0.5) * domain.height() / samples};
            double const v = density(p);
            if (!std::isfinite(v) || v < 0.0)
            {
                throw InvalidArgument("density must be finite and non-negative");
            }
            grid[j * samples + i] = v;
        }
    }
    for (int j = 0; j < samples; ++j)
    {
        for (int i = 0; i < samples; ++i)
        {
            double const v = grid[j * samples + i];
            bool const jump_x = i + 1 < samples && std::abs(grid[j * samples + i + 1] - v) > max_jump;
            bool const jump_y
                = j + 1 < samples && std::abs(grid[(j + 1) * samples + i] - v) > max_jump;
            if (jump_x || jump_y)
            {
                throw InvalidArgument("density oscillates by more than max_jump between samples");
            }
        }
    }
    DensityField out;
    out.domain_ = domain;
    out.density_ = std::move(density);
    return out;
}

DensityField DensityField::constant(Rect domain, double value)
{
    DensityField out = make(domain, [value](Point2) { return value; });
    out.constant_ = true;
    return out;
}

double DensityField::operator()(Point2 p) const
{
    return domain_.contains(p) ? density_(p) : 0.0;
}

double DensityField::integral(Rect sub, int cells) const
{
    Rect const clip{std::max(sub.xmin, domain_.xmin), std::min(sub.xmax, domain_.xmax),
                    std::max(sub.ymin, domain_.ymin), std::min(sub.ymax, domain_.ymax)};
    if (!(clip.xmax > clip.xmin) || !(clip.ymax > clip.ymin) || cells < 1)
    {
        return 0.0;
    }
    double const hx = clip.width() / cells;
    double const hy = clip.height() / cells;
    double sum = 0.0;
    for (int j = 0; j < cells; ++j)
    {
        for (int i = 0; i < cells; ++i)
        {
            for (Node const& nx : gauss4())
            {
                for (Node const& ny : gauss4())
                {
                    Point2 const p{clip.xmin + (i + nx.x) * hx, clip.ymin + (j + ny.x) * hy};
                    sum += nx.w * ny.w * density_(p);
                }
            }
        }
    }
    return sum * hx * hy;
}

//---------------------------------------------------------------------------//

GridField::GridField(Rect rect, std::size_t nx, std::size_t ny)
    : rect_(rect), nx_(nx), ny_(ny), h_(0.0)
{
    if (nx < 2 || ny < 2)
    {
        throw InvalidArgument("GridField needs at least 2 x 2 nodes");
    }
    if (!(rect.width() > 0.0) || !(rect.height() > 0.0))
    {
        throw InvalidArgument("GridField rectangle must have positive area");
    }
    h_ = rect.width() / double(nx);
    double const hy = rect.height() / double(ny);
    if (std::abs(hy - h_) > 1e-9 * h_)
    {
        throw InvalidArgument("GridField cells must be square: width/nx != height/ny");
    }
    values_.assign(nx * ny, Complex{});
}

Complex interpolate_bicubic(GridField const& field, Point2 p)
{
    if (field.nx() < 4 || field.ny() < 4)
    {
        throw InvalidArgument("interpolate_bicubic needs at least 4 x 4 nodes");
    }
    double const h = field.h();
    double const fx = (p.x - field.rect().xmin) / h - 0.5;
    double const fy = (p.y - field.rect().ymin) / h - 0.5;
    auto base = [](double f, std::size_t n) {
        long const b = long(std::floor(f)) - 1;
        return std::size_t(std::clamp<long>(b, 0, long(n) - 4));
    };
    std::size_t const i0 = base(fx, field.nx());
    std::size_t const j0 = base(fy, field.ny());
    auto const wx = cubic_weights(fx - double(i0));
    auto const wy = cubic_weights(fy - double(j0));
    Complex sum;
    for (std::size_t b = 0; b < 4; ++b)
    {
        Complex row;
        for (std::size_t a = 0; a < 4; ++a)
        {
            row += wx[a] * field.at(i0 + a, j0 + b);
        }
        sum += wy[b] * row;
    }
    return sum;
}

//---------------------------------------------------------------------------//

ScattererSet distribute_centers(DensityField const& density, double a, std::uint64_t seed,
                                DistributionOptions const& options)
{
    if (!(a > 0.0))
    {
        throw InvalidArgument("distribute_centers: radius must be positive");
    }
    if (!(options.cell_scale > 0.0) || !(options.separation_coefficient >= 0.0))
    {
        throw InvalidArgument("distribute_centers: invalid options");
    }
    Rect const& dom = density.domain();
    double const b = options.cell_scale * std::pow(a, 0.25);
    std::size_t const nbx = std::max<std::size_t>(1, std::size_t(std::lround(dom.width() / b)));
    std::size_t const nby = std::max<std::size_t>(1, std::size_t(std::lround(dom.height() / b)));
    double const bx = dom.width() / double(nbx);
    double const by = dom.height() / double(nby);
    double const d = std::max(ScattererSet::default_separation_ratio * a,
                              options.separation_coefficient * std::sqrt(a));

    std::vector<double> exact(nbx * nby);
    double expected_total = 0.0;
    for (std::size_t j = 0; j < nby; ++j)
    {
        for (std::size_t i = 0; i < nbx; ++i)
        {
            Point2 const yp{dom.xmin + (double(i) + 0.5) * bx, dom.ymin + (double(j) + 0.5) * by};
            exact[j * nbx + i] = density(yp) * bx * by / (2.0 * pi * a);
            expected_total += exact[j * nbx + i];
        }
    }
    if (expected_total > double(options.max_scatterers))
    {
        throw CapacityError("distribute_centers: expected M = " + std::to_string(expected_total)
                            + " exceeds the cap of " + std::to_string(options.max_scatterers));
    }
    std::vector<std::size_t> const counts = diffuse_round(exact, nbx, nby);

    // Square (i, j) holds a shifted rank-1 lattice on its own torus. Its x
    // coordinates are n equispaced values, so the x shift only decides how a
    // vertical edge through the square rounds; likewise the y shift for a
    // horizontal edge. The shifts are chosen greedily to keep the running
    // counting error along every column and row of squares small, which
    // bounds the error along any straight edge. A random whole number of
    // lattice periods varies the pattern without changing either marginal.
    constexpr int max_attempts = 256;
    std::map<std::size_t, Lattice> lattices;
    std::vector<std::vector<Point2>> placed(nbx * nby);
    std::vector<std::vector<double>> column_error(nbx, std::vector<double>(profile_samples));
    std::vector<std::vector<double>> row_error(nby, std::vector<double>(profile_samples));
    std::vector<Point2> trial;
    for (std::size_t j = 0; j < nby; ++j)
    {
        for (std::size_t i = 0; i < nbx; ++i)
        {
            std::size_t const cell = j * nbx + i;
            std::size_t const n = counts[cell];
            if (n == 0)
            {
                continue;
            }
            auto found = lattices.find(n);
            if (found == lattices.end())
            {
                found = lattices.emplace(n, best_lattice(n, bx, by)).first;
            }
            Lattice const& lat = found->second;
            if (lat.min_distance < d)
            {
                throw CapacityError("distribute_centers: cannot fit " + std::to_string(n)
                                    + " points in a partition square with separation "
                                    + std::to_string(d));
            }
            double const whole_x = std::floor(double(n) * uniform01(seed, cell, 0));
            double const whole_y = std::floor(double(n) * uniform01(seed, cell, 1));
            std::vector<double> const xs = ranked_phases(column_error[i], n, whole_x);
            std::vector<double> const ys = ranked_phases(row_error[j], n, whole_y);

            auto place = [&](double sx, double sy) {
                trial.clear();
                for (std::size_t k = 0; k < n; ++k)
                {
                    double const u = wrap01((double(k) + 0.5) / double(n) + sx);
                    double const v
                        = wrap01((double((k * lat.generator) % n) + 0.5) / double(n) + sy);
                    trial.push_back(
                        {dom.xmin + (double(i) + u) * bx, dom.ymin + (double(j) + v) * by});
                }
            };
            // Try shift pairs in order of combined rank.
            bool accepted = false;
            double s = 0.0;
            double t = 0.0;
            int attempts = 0;
            for (std::size_t sum = 0; sum < 2 * xs.size() && !accepted && attempts < max_attempts;
                 ++sum)
            {
                for (std::size_t ra = 0; ra <= sum && !accepted && attempts < max_attempts; ++ra)
                {
                    std::size_t const rb = sum - ra;
                    if (ra >= xs.size() || rb >= ys.size())
                    {
                        continue;
                    }
                    ++attempts;
                    s = xs[ra];
                    t = ys[rb];
                    place(s, t);
                    accepted = clear_of_neighbors(trial, placed, i, j, nbx, nby, d);
                }
            }
            // Fall back to unconstrained random shifts.
            for (int attempt = 0; attempt < max_attempts && !accepted; ++attempt)
            {
                s = uniform01(seed, cell, 2 * std::uint64_t(attempt) + 2);
                t = uniform01(seed, cell, 2 * std::uint64_t(attempt) + 3);
                place(s, t);
                accepted = clear_of_neighbors(trial, placed, i, j, nbx, nby, d);
            }
            if (!accepted)
            {
                throw CapacityError("distribute_centers: no placement of " + std::to_string(n)
                                    + " points in square (" + std::to_string(i) + ", "
                                    + std::to_string(j) + ") honors separation "
                                    + std::to_string(d));
            }
            add_marginal_error(column_error[i], n, s);
            add_marginal_error(row_error[j], n, t);
            placed[cell] = trial;
        }
    }
    std::vector<Point2> centers;
    for (auto const& cell : placed)
    {
        centers.insert(centers.end(), cell.begin(), cell.end());
    }
    return ScattererSet::make(std::move(centers), a, d);
}

//---------------------------------------------------------------------------//

GridField nystrom_solve(WaveParams const& wp, DensityField const& density, GridSpec grid,
                        NystromOptions const& options)
{
    GridField field(density.domain(), grid.nx, grid.ny);
    double const h = field.h();
    double const kappa = wp.kappa();
    double const wavelength = 2.0 * pi / kappa;
    if (h > wavelength / options.min_cells_per_wavelength)
    {
        throw CapacityError("nystrom_solve: grid spacing h = " + std::to_string(h)
                            + " does not resolve the wavelength (need h <= "
                            + std::to_string(wavelength / options.min_cells_per_wavelength)
                            + ")");
    }
    std::size_t const nx = grid.nx;
    std::size_t const ny = grid.ny;
    std::size_t const n = nx * ny;
    if (n > options.max_unknowns)
    {
        throw CapacityError("nystrom_solve: " + std::to_string(n) + " unknowns exceed the cap of "
                            + std::to_string(options.max_unknowns));
    }

    // g depends only on the index offset on a uniform grid.
    std::vector<Complex> table(n);
    for (std::size_t dj = 0; dj < ny; ++dj)
    {
        for (std::size_t di = 0; di < nx; ++di)
        {
            if (di == 0 && dj == 0)
            {
                continue;
            }
            double const r = h * std::hypot(double(di), double(dj));
            table[dj * nx + di] = 0.25 * I * specfun::hankel1(0, kappa * r);
        }
    }
    Complex const self = self_cell_weight(kappa, h);

    std::vector<double> weights(n);
    ComplexVector rhs(n);
    for (std::size_t j = 0; j < ny; ++j)
    {
        for (std::size_t i = 0; i < nx; ++i)
        {
            weights[field.index(i, j)] = density(field.node(i, j));
            rhs(field.index(i, j)) = incident_u0(wp, field.node(i, j));
        }
    }

    Complex const c = I * wp.xi();
    ComplexMatrix a(n, n);
    parallel_for(n, [&](std::size_t row) {
        std::size_t const ip = row % nx;
        std::size_t const jp = row / nx;
        for (std::size_t col = 0; col < n; ++col)
        {
            std::size_t const iq = col % nx;
            std::size_t const jq = col / nx;
            std::size_t const di = ip > iq ? ip - iq : iq - ip;
            std::size_t const dj = jp > jq ? jp - jq : jq - jp;
            a(row, col) = row == col ? 1.0 - c * weights[col] * self
                                     : -c * weights[col] * h * h * table[dj * nx + di];
        }
    });

    DenseSolveResult const res = solve_dense(a, rhs);
    for (std::size_t k = 0; k < n; ++k)
    {
        field.values()[k] = res.x(k);
    }
    field.solve_residual = res.rhs_norm > 0.0 ? res.residual / res.rhs_norm : res.residual;
    return field;
}

Complex integral_equation_rhs(WaveParams const& wp, DensityField const& density,
                              GridField const& field, Point2 p)
{
    double const h = field.h();
    double const kappa = wp.kappa();
    Rect const& rect = field.rect();
    auto const cell_of = [h](double v, double lo, std::size_t count) {
        long const c = long(std::floor((v - lo) / h));
        return std::clamp<long>(c, 0, long(count) - 1);
    };
    long const ci = cell_of(p.x, rect.xmin, field.nx());
    long const cj = cell_of(p.y, rect.ymin, field.ny());

    auto integrand = [&](Point2 y) {
        double const n = density(y);
        if (n == 0.0)
        {
            return Complex{};
        }
        return green(kappa, p, y) * n * interpolate_bicubic(field, y);
    };

    Complex sum;
    for (std::size_t j = 0; j < field.ny(); ++j)
    {
        for (std::size_t i = 0; i < field.nx(); ++i)
        {
            long const di = long(i) - ci;
            long const dj = long(j) - cj;
            Point2 const lo{rect.xmin + double(i) * h, rect.ymin + double(j) * h};
            if (std::abs(di) > 1 || std::abs(dj) > 1)
            {
                Point2 const y = field.node(i, j);
                double const n = density(y);
                if (n != 0.0)
                {
                    sum += h * h * green(kappa, p, y) * n * field.at(i, j);
                }
                continue;
            }
            bool const contains = p.x > lo.x && p.x < lo.x + h && p.y > lo.y && p.y < lo.y + h;
            if (!contains)
            {
                for (Node const& gx : gauss8())
                {
                    for (Node const& gy : gauss8())
                    {
                        sum += h * h * gx.w * gy.w * integrand({lo.x + gx.x * h, lo.y + gy.x * h});
                    }
                }
                continue;
            }
            // Split the cell into four triangles with apex p; the Duffy map
            // y = p + s (A - p + t (B - A)) has Jacobian s |det(A - p, B - p)|.
            std::array<Point2, 4> const corners{
                lo, Point2{lo.x + h, lo.y}, Point2{lo.x + h, lo.y + h}, Point2{lo.x, lo.y + h}};
            for (std::size_t e = 0; e < 4; ++e)
            {
                Point2 const va = corners[e] - p;
                Point2 const vb = corners[(e + 1) % 4] - p;
                double const det = std::abs(va.x * vb.y - va.y * vb.x);
                for (Node const& gs : gauss16())
                {
                    for (Node const& gt : gauss16())
                    {
                        Point2 const dir = va + gt.x * (vb - va);
                        Point2 const y = p + gs.x * dir;
                        sum += gs.w * gt.w * gs.x * det * integrand(y);
                    }
                }
            }
        }
    }
    return incident_u0(wp, p) + I * wp.xi() * sum;
}

PdeResidual pde_residual(WaveParams const& wp, DensityField const& density, GridField const& u,
                         std::size_t margin_nodes)
{
    if (margin_nodes < 2)
    {
        throw InvalidArgument("pde_residual: margin must be at least 2 nodes");
    }
    if (u.nx() <= 2 * margin_nodes || u.ny() <= 2 * margin_nodes)
    {
        throw InvalidArgument("pde_residual: grid too small for the requested margin");
    }
    double umax = 0.0;
    for (Complex const& v : u.values())
    {
        umax = std::max(umax, std::abs(v));
    }
    PdeResidual out;
    out.node_residual.assign(u.size(), 0.0);
    if (umax == 0.0)
    {
        return out;
    }
    double const h = u.h();
    double const k2 = wp.kappa() * wp.kappa();
    Complex const c = I * wp.xi();
    for (std::size_t j = margin_nodes; j < u.ny() - margin_nodes; ++j)
    {
        for (std::size_t i = margin_nodes; i < u.nx() - margin_nodes; ++i)
        {
            Complex const center = u.at(i, j);
            Complex const lap
                = (u.at(i + 1, j) + u.at(i - 1, j) + u.at(i, j + 1) + u.at(i, j - 1) - 4.0 * center)
                  / (h * h);
            double const r
                = std::abs(lap + k2 * center + c * density(u.node(i, j)) * center) / umax;
            out.node_residual[u.index(i, j)] = r;
            if (r > out.max_residual)
            {
                out.max_residual = r;
                out.i = i;
                out.j = j;
            }
        }
    }
    return out;
}

//---------------------------------------------------------------------------//

RefractionResult refraction(WaveParams const& wp, double N)
{
    if (!(N >= 0.0) || !std::isfinite(N))
    {
        throw InvalidArgument("refraction: density N must be finite and non-negative");
    }
    RefractionResult out;
    out.N = N;
    out.xi = wp.xi();
    out.n0_sq = wp.n0_sq();
    out.n_sq = wp.n0_sq() * (1.0 + I * wp.xi() * N / (wp.k() * wp.k()));
    out.kappa_N_sq = effective_kappa_sq(wp, N);
    return out;
}

double design_density(WaveParams const& wp, Complex target_n_sq)
{
    if (!std::isfinite(target_n_sq.real()) || !std::isfinite(target_n_sq.imag()))
    {
        throw InvalidArgument("design_density: target must be finite");
    }
    Complex const n = wp.k() * wp.k() * (target_n_sq / wp.n0_sq() - 1.0) / (I * wp.xi());
    if (std::abs(n.imag()) > 1e-9 * std::abs(n))
    {
        throw InfeasibleTarget(
            "design_density: target phase is incompatible with zeta; required N has imaginary "
            "part "
            + std::to_string(n.imag()) + " (real part " + std::to_string(n.real()) + ")");
    }
    if (n.real() < 0.0)
    {
        throw InfeasibleTarget("design_density: target requires negative density N = "
                               + std::to_string(n.real()));
    }
    return n.real();
}

Complex effective_kappa_sq(WaveParams const& wp, double N)
{
    return wp.kappa() * wp.kappa() + I * wp.xi() * N;
}

Complex effective_plane_wave(WaveParams const& wp, double N, Point2 p)
{
    Complex const kn = std::sqrt(effective_kappa_sq(wp, N));
    return std::exp(I * kn * p.y);
}

}  // namespace thinscat
