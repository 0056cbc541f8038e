#include <cmath>
#include <numbers>
#include <random>
#include <vector>

#include "doctest.h"
#include "thinscat/error.hpp"
#include "thinscat/medium.hpp"
#include "thinscat/random.hpp"

using namespace thinscat;

namespace {

constexpr Complex I{0.0, 1.0};
constexpr double pi = std::numbers::pi;
Rect const unit_square{0.0, 1.0, 0.0, 1.0};

WaveParams unit_params()
{
    return WaveParams::make(1.0, 1.0, 1.0, 1.0, 0.0);
}

double max_difference(GridField const& coarse, GridField const& fine)
{
    double worst = 0.0;
    for (double x = 0.1; x < 0.95; x += 0.1)
    {
        for (double y = 0.1; y < 0.95; y += 0.1)
        {
            worst = std::max(worst, std::abs(interpolate_bicubic(coarse, {x, y})
                                             - interpolate_bicubic(fine, {x, y})));
        }
    }
    return worst;
}

}  // namespace

TEST_CASE("density field")
{
    auto const n = DensityField::constant(unit_square, 2.5);
    CHECK(n.is_constant());
    CHECK(n({0.3, 0.3}) == 2.5);
    CHECK(n({1.3, 0.3}) == 0.0);
    CHECK(n.integral(unit_square) == doctest::Approx(2.5).epsilon(1e-14));
    CHECK(n.integral({0.5, 2.0, -1.0, 0.5}) == doctest::Approx(0.625).epsilon(1e-14));

    auto const smooth = DensityField::make(unit_square, [](Point2 p) { return p.x * p.x + std::sin(p.y); });
    CHECK_FALSE(smooth.is_constant());
    CHECK(smooth.integral(unit_square) == doctest::Approx(1.0 / 3.0 + 1.0 - std::cos(1.0)).epsilon(1e-12));

    CHECK_THROWS_AS(DensityField::make(unit_square, [](Point2 p) { return p.x - 0.5; }), InvalidArgument);
    CHECK_THROWS_AS(DensityField::make({0.0, 0.0, 0.0, 1.0}, [](Point2) { return 1.0; }), InvalidArgument);
    CHECK_THROWS_AS(DensityField::make(unit_square, {}), InvalidArgument);
    CHECK_THROWS_AS(
        DensityField::make(unit_square, [](Point2 p) { return p.x < 0.5 ? 0.0 : 10.0; }, 1.0),
        InvalidArgument);
    CHECK_THROWS_AS(DensityField::constant(unit_square, -1.0), InvalidArgument);
}

TEST_CASE("bicubic interpolation is exact on cubics")
{
    GridField f({0.0, 2.0, -1.0, 1.0}, 10, 10);
    auto cubic = [](Point2 p) {
        return Complex{1.0 + p.x - 2.0 * p.x * p.x * p.y + p.y * p.y * p.y, p.x * p.x * p.x - 0.5 * p.y};
    };
    for (std::size_t j = 0; j < f.ny(); ++j)
    {
        for (std::size_t i = 0; i < f.nx(); ++i)
        {
            f.at(i, j) = cubic(f.node(i, j));
        }
    }
    std::mt19937_64 rng(5);
    std::uniform_real_distribution<double> ux(0.0, 2.0);
    std::uniform_real_distribution<double> uy(-1.0, 1.0);
    for (int k = 0; k < 200; ++k)
    {
        Point2 const p{ux(rng), uy(rng)};
        CHECK(std::abs(interpolate_bicubic(f, p) - cubic(p)) < 1e-12);
    }
    CHECK_THROWS_AS(interpolate_bicubic(GridField(unit_square, 3, 3), {0.5, 0.5}), InvalidArgument);
    CHECK_THROWS_AS(GridField(unit_square, 4, 5), InvalidArgument);
    CHECK_THROWS_AS(GridField(unit_square, 1, 1), InvalidArgument);
}

TEST_CASE("center distribution")
{
    SUBCASE("zero density gives no centers")
    {
        auto const set = distribute_centers(DensityField::constant(unit_square, 0.0), 1e-3, 1);
        CHECK(set.empty());
    }

    SUBCASE("constant density: counting identity")
    {
        double const a = 1e-3;
        for (std::size_t m0 : {50u, 137u, 400u})
        {
            double const value = 2.0 * pi * a * double(m0);
            auto const set = distribute_centers(DensityField::constant(unit_square, value), a, 3);
            CHECK(std::abs(double(set.size()) - double(m0)) <= 0.5);
        }
    }

    SUBCASE("reproducible and seed dependent")
    {
        auto const n = DensityField::constant(unit_square, 1.0);
        auto const s1 = distribute_centers(n, 1e-3, 42);
        auto const s2 = distribute_centers(n, 1e-3, 42);
        auto const s3 = distribute_centers(n, 1e-3, 43);
        REQUIRE(s1.size() == s2.size());
        bool same = true;
        bool differs = false;
        for (std::size_t m = 0; m < s1.size(); ++m)
        {
            same = same && s1.center(m) == s2.center(m);
            differs = differs || !(s1.center(m) == s3.center(m));
        }
        CHECK(same);
        CHECK(differs);
    }

    SUBCASE("separation and containment")
    {
        double const a = 1e-3;
        auto const n = DensityField::make({-1.0, 1.0, 0.0, 1.0}, [](Point2 p) { return 1.0 + p.x * p.x; });
        auto const set = distribute_centers(n, a, 7);
        double const d = std::max(10.0 * a, std::sqrt(a));
        CHECK(set.min_separation() == doctest::Approx(d));
        double nearest = 1e300;
        for (std::size_t i = 0; i < set.size(); ++i)
        {
            CHECK(n.domain().contains(set.center(i)));
            for (std::size_t j = i + 1; j < set.size(); ++j)
            {
                nearest = std::min(nearest, distance(set.center(i), set.center(j)));
            }
        }
        CHECK(nearest >= d);
        double const expected = n.integral(n.domain()) / (2.0 * pi * a);
        CHECK(std::abs(double(set.size()) - expected) <= 0.5);
    }

    SUBCASE("sub-rectangle counts")
    {
        double const a = 1e-3;
        auto const n = DensityField::constant(unit_square, 1.0);
        auto const set = distribute_centers(n, a, 11);
        double worst = 0.0;
        for (std::uint64_t r = 0; r < 16; ++r)
        {
            double const w = 0.5 + 0.5 * uniform01(1234, r, 0);
            double const h = 0.5 + 0.5 * uniform01(1234, r, 1);
            double const x0 = (1.0 - w) * uniform01(1234, r, 2);
            double const y0 = (1.0 - h) * uniform01(1234, r, 3);
            Rect const sub{x0, x0 + w, y0, y0 + h};
            double count = 0.0;
            for (Point2 p : set.centers())
            {
                count += sub.contains(p) ? 1.0 : 0.0;
            }
            double const expected = n.integral(sub) / (2.0 * pi * a);
            worst = std::max(worst, std::abs(count - expected) / expected);
        }
        CHECK(worst <= 0.05);
    }

    SUBCASE("capacity")
    {
        DistributionOptions options;
        options.max_scatterers = 100;
        CHECK_THROWS_AS(distribute_centers(DensityField::constant(unit_square, 1.0), 1e-3, 1, options),
                        CapacityError);
        // Far too dense for separation d.
        CHECK_THROWS_AS(distribute_centers(DensityField::constant(unit_square, 50.0), 1e-3, 1), CapacityError);
        CHECK_THROWS_AS(distribute_centers(DensityField::constant(unit_square, 1.0), 0.0, 1), InvalidArgument);
    }
}

TEST_CASE("Nystrom solution")
{
    auto const wp = unit_params();
    auto const n = DensityField::constant(unit_square, 1.0);

    SUBCASE("zero density reproduces the incident wave")
    {
        auto const u = nystrom_solve(wp, DensityField::constant(unit_square, 0.0), {8, 8});
        for (std::size_t j = 0; j < 8; ++j)
        {
            for (std::size_t i = 0; i < 8; ++i)
            {
                CHECK(u.at(i, j) == incident_u0(wp, u.node(i, j)));
            }
        }
    }

    SUBCASE("discrete residual")
    {
        auto const u = nystrom_solve(wp, n, {16, 16});
        CHECK(u.solve_residual <= 1e-10);
    }

    SUBCASE("Born series at tiny coupling")
    {
        // u(eps) = u0 + eps B + eps^2 C + ...; the second difference isolates C.
        auto solve = [&](double eps) { return nystrom_solve(wp, DensityField::constant(unit_square, eps), {12, 12}); };
        auto second_difference = [&](double eps) {
            auto const u1 = solve(eps);
            auto const u2 = solve(2.0 * eps);
            double worst = 0.0;
            for (std::size_t k = 0; k < u1.size(); ++k)
            {
                Complex const u0 = incident_u0(wp, u1.node(k % 12, k / 12));
                worst = std::max(worst, std::abs(u2.values()[k] - 2.0 * u1.values()[k] + u0));
            }
            return worst / (eps * eps);
        };
        double const c1 = second_difference(1e-3);
        double const c2 = second_difference(5e-4);
        CHECK(c1 > 0.0);
        CHECK(c1 < 10.0);
        CHECK(c2 == doctest::Approx(c1).epsilon(0.01));
    }

    SUBCASE("self-convergence order")
    {
        auto const u8 = nystrom_solve(wp, n, {8, 8});
        auto const u16 = nystrom_solve(wp, n, {16, 16});
        auto const u32 = nystrom_solve(wp, n, {32, 32});
        double const order = std::log2(max_difference(u8, u16) / max_difference(u16, u32));
        MESSAGE("self-convergence order " << order);
        CHECK(order >= 1.8);
    }

    SUBCASE("off-grid probes satisfy the integral equation")
    {
        auto const u = nystrom_solve(wp, n, {16, 16});
        double const h = u.h();
        for (Point2 p : {Point2{0.37, 0.61}, Point2{0.5, 0.5}, Point2{0.81, 0.13}, Point2{0.22, 0.9}})
        {
            Complex const rhs = integral_equation_rhs(wp, n, u, p);
            Complex const value = interpolate_bicubic(u, p);
            CHECK(std::abs(rhs - value) / std::abs(value) <= 5.0 * h * h);
        }
    }

    SUBCASE("resolution and size limits")
    {
        auto const wide = DensityField::constant({0.0, 10.0, 0.0, 10.0}, 1.0);
        CHECK_THROWS_AS(nystrom_solve(wp, wide, {8, 8}), CapacityError);
        NystromOptions options;
        options.max_unknowns = 100;
        CHECK_THROWS_AS(nystrom_solve(wp, n, {16, 16}, options), CapacityError);
    }
}

TEST_CASE("PDE residual")
{
    auto const wp = unit_params();

    SUBCASE("incident wave without scatterers is pure truncation error")
    {
        auto const zero = DensityField::constant(unit_square, 0.0);
        auto residual = [&](std::size_t cells) {
            GridField u(unit_square, cells, cells);
            for (std::size_t j = 0; j < cells; ++j)
            {
                for (std::size_t i = 0; i < cells; ++i)
                {
                    u.at(i, j) = incident_u0(wp, u.node(i, j));
                }
            }
            return pde_residual(wp, zero, u).max_residual;
        };
        double const r16 = residual(16);
        double const r32 = residual(32);
        CHECK(r16 < 1e-3);
        CHECK(std::log2(r16 / r32) == doctest::Approx(2.0).epsilon(0.02));
    }

    SUBCASE("Nystrom solution converges away from the boundary")
    {
        auto const n = DensityField::constant(unit_square, 1.0);
        auto const r16 = pde_residual(wp, n, nystrom_solve(wp, n, {16, 16}), 4).max_residual;
        auto const r32 = pde_residual(wp, n, nystrom_solve(wp, n, {32, 32}), 8).max_residual;
        MESSAGE("PDE residual order " << std::log2(r16 / r32));
        CHECK(std::log2(r16 / r32) >= 1.7);
    }

    SUBCASE("a corrupted node produces a spike")
    {
        auto const n = DensityField::constant(unit_square, 1.0);
        auto u = nystrom_solve(wp, n, {16, 16});
        u.at(7, 9) += 1.0;
        auto const r = pde_residual(wp, n, u);
        double const h = u.h();
        CHECK(r.node_residual[u.index(7, 9)] >= 1.0 / (h * h));
        CHECK(r.i == 7);
        CHECK(r.j == 9);
    }

    SUBCASE("margin checks")
    {
        GridField u(unit_square, 8, 8);
        auto const n = DensityField::constant(unit_square, 1.0);
        CHECK_THROWS_AS(pde_residual(wp, n, u, 1), InvalidArgument);
        CHECK_THROWS_AS(pde_residual(wp, n, u, 4), InvalidArgument);
    }
}

TEST_CASE("refraction coefficient")
{
    SUBCASE("worked examples")
    {
        auto const wp = WaveParams::make(1.0, 1.0, 1.0, I, 0.6);
        CHECK(refraction(wp, 0.0).n_sq == Complex{wp.n0_sq(), 0.0});
        auto const r = refraction(wp, 0.5);
        CHECK(std::abs(r.n_sq - Complex{1.32, 0.0}) < 1e-14);
        CHECK(std::abs(r.kappa_N_sq - (wp.kappa() * wp.kappa() + I * wp.xi() * 0.5)) < 1e-15);
        CHECK(design_density(wp, 1.32) == doctest::Approx(0.5).epsilon(1e-13));
        CHECK(design_density(wp, wp.n0_sq()) == 0.0);
        CHECK_THROWS_AS(refraction(wp, -1.0), InvalidArgument);
    }

    SUBCASE("sign of the imaginary part")
    {
        auto const wp = WaveParams::make(1.3, 0.9, 1.4, Complex{0.7, 0.4}, 0.5);
        auto const r = refraction(wp, 2.0);
        double const expected = wp.xi().real() * 2.0 * wp.n0_sq() / (wp.k() * wp.k());
        CHECK(r.n_sq.imag() == doctest::Approx(expected).epsilon(1e-14));
    }

    SUBCASE("feasibility with real xi")
    {
        auto const wp = WaveParams::make(1.0, 1.0, 1.0, 1.0, 0.0);
        CHECK(design_density(wp, Complex{1.0, 1.0}) == doctest::Approx(wp.k() * wp.k()));
        CHECK_THROWS_AS(design_density(wp, Complex{1.5, 0.2}), InfeasibleTarget);
        CHECK_THROWS_AS(design_density(wp, Complex{1.0, -0.5}), InfeasibleTarget);
    }

    SUBCASE("round trip on random feasible targets")
    {
        std::mt19937_64 rng(99);
        std::uniform_real_distribution<double> unit(0.2, 2.0);
        std::uniform_real_distribution<double> angle(-1.5, 1.5);
        for (int trial = 0; trial < 100; ++trial)
        {
            double const k = unit(rng);
            double const mu = unit(rng);
            auto const wp = WaveParams::make(1.0, mu, k * k / mu, std::polar(unit(rng), angle(rng)), 0.5 * k);
            Complex const target = refraction(wp, 5.0 * unit(rng)).n_sq;
            double const n = design_density(wp, target);
            CHECK(std::abs(refraction(wp, n).n_sq - target) <= 1e-12 * std::abs(target));
        }
    }

    SUBCASE("homogenized plane wave")
    {
        auto const wp = WaveParams::make(1.0, 1.0, 1.0, Complex{1.0, 0.3}, 0.2);
        Complex const kn = std::sqrt(effective_kappa_sq(wp, 1.5));
        CHECK(kn.imag() >= 0.0);
        Point2 const p{0.3, 0.8};
        double const h = 1e-3;
        auto u = [&](Point2 q) { return effective_plane_wave(wp, 1.5, q); };
        Complex const lap = (u(p + Point2{h, 0.0}) + u(p - Point2{h, 0.0}) + u(p + Point2{0.0, h})
                             + u(p - Point2{0.0, h}) - 4.0 * u(p))
                            / (h * h);
        CHECK(std::abs(lap + effective_kappa_sq(wp, 1.5) * u(p)) < 1e-5);
    }
}
