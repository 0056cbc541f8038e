#include <cmath>
#include <vector>

#include "doctest.h"
#include "thinscat/emfields.hpp"
#include "thinscat/error.hpp"
#include "thinscat/single.hpp"
#include "thinscat/specfun.hpp"

using namespace thinscat;

namespace {

constexpr Complex I{0.0, 1.0};

WaveParams oblique_params()
{
    return WaveParams::make(1.3, 1.1, 0.9, Complex{1.0, -0.4}, 0.5);
}

EMSampler incident_sampler(WaveParams const& wp)
{
    return [wp](Point2 p, double z) {
        return reconstruct_EH(wp, {incident_u0(wp, p), incident_u0_grad(wp, p), p, z});
    };
}

EMSampler single_sampler(WaveParams const& wp, Cylinder const& cyl)
{
    return [wp, cyl](Point2 p, double z) {
        return reconstruct_EH(
            wp, {scattered_field_single(wp, cyl, p), scattered_field_single_grad(wp, cyl, p), p, z});
    };
}

double worst_residual(EMSampler const& sampler, WaveParams const& wp, Point2 p, double z, double h)
{
    auto const r = maxwell_residual(sampler, wp, p, z, h);
    return std::max(r[0], r[1]);
}

}  // namespace

TEST_CASE("incident field reconstruction")
{
    auto const wp = oblique_params();
    for (Point2 p : {Point2{0.0, 0.0}, Point2{1.5, -0.7}, Point2{-3.0, 2.2}})
    {
        for (double z : {0.0, 0.8, -2.5})
        {
            EMField const f = incident_sampler(wp)(p, z);
            Vec3c const e0 = incident_E0(wp, p, z);
            for (int c = 0; c < 3; ++c)
            {
                CHECK(std::abs(f.E[c] - e0[c]) < 1e-12);
            }
            CHECK(f.H[2] == Complex{});
        }
    }
    // |E0| = 1 for real wave numbers.
    Vec3c const e0 = incident_E0(wp, {0.4, 0.4}, 0.3);
    CHECK(std::sqrt(std::norm(e0[0]) + std::norm(e0[1]) + std::norm(e0[2])) == doctest::Approx(1.0));
}

TEST_CASE("reconstruction identities")
{
    auto const wp = oblique_params();
    ScalarSample s{Complex{0.3, -1.2}, {Complex{0.5, 0.1}, Complex{-0.2, 0.9}}, {0.1, 0.2}, 0.7};

    SUBCASE("transverse components are tied by omega epsilon / k3")
    {
        EMField const f = reconstruct_EH(wp, s);
        double const ratio = wp.omega() * wp.epsilon() / wp.k3();
        CHECK(std::abs(f.H[1] - ratio * f.E[0]) < 1e-14);
        CHECK(std::abs(f.H[0] + ratio * f.E[1]) < 1e-14);
        CHECK(f.H[2] == Complex{});
    }

    SUBCASE("zero gradient leaves only the axial component")
    {
        ScalarSample flat = s;
        flat.grad_u = {};
        EMField const f = reconstruct_EH(wp, flat);
        CHECK(f.E[0] == Complex{});
        CHECK(f.E[1] == Complex{});
        CHECK(std::abs(f.E[2] - wp.kappa() / wp.k() * s.u * std::exp(I * wp.k3() * s.z)) < 1e-15);
        CHECK(f.H[0] == Complex{});
        CHECK(f.H[1] == Complex{});
    }

    SUBCASE("linear in the scalar data")
    {
        ScalarSample t{Complex{-0.7, 0.2}, {Complex{0.0, 1.0}, Complex{2.0, 0.0}}, s.position, s.z};
        Complex const alpha{0.3, 0.8};
        ScalarSample sum{s.u + alpha * t.u, {s.grad_u[0] + alpha * t.grad_u[0], s.grad_u[1] + alpha * t.grad_u[1]},
                         s.position, s.z};
        EMField const fs = reconstruct_EH(wp, s);
        EMField const ft = reconstruct_EH(wp, t);
        EMField const f = reconstruct_EH(wp, sum);
        for (int c = 0; c < 3; ++c)
        {
            CHECK(std::abs(f.E[c] - fs.E[c] - alpha * ft.E[c]) < 1e-14);
            CHECK(std::abs(f.H[c] - fs.H[c] - alpha * ft.H[c]) < 1e-14);
        }
    }
}

TEST_CASE("Maxwell residuals converge at second order")
{
    auto const wp = oblique_params();

    SUBCASE("incident field")
    {
        auto const sampler = incident_sampler(wp);
        Point2 const p{0.3, -0.2};
        double const coarse = worst_residual(sampler, wp, p, 0.4, 0.02);
        double const fine = worst_residual(sampler, wp, p, 0.4, 0.01);
        CHECK(std::log2(coarse / fine) == doctest::Approx(2.0).epsilon(0.05));
        CHECK(std::abs(divergence_E(sampler, wp, p, 0.4, 0.01)) < 1e-4);
    }

    SUBCASE("single scatterer")
    {
        auto const cyl = Cylinder::make({0.0, 0.0}, 0.01);
        auto const sampler = single_sampler(wp, cyl);
        for (Point2 p : {Point2{0.5, 0.3}, Point2{-1.0, 2.0}})
        {
            double const coarse = worst_residual(sampler, wp, p, 0.0, 0.02);
            double const fine = worst_residual(sampler, wp, p, 0.0, 0.01);
            CHECK(std::log2(coarse / fine) == doctest::Approx(2.0).epsilon(0.05));
        }
    }

    SUBCASE("close to the cylinder")
    {
        // r = 2a with steps well below a.
        double const a = 0.01;
        auto const cyl = Cylinder::make({0.0, 0.0}, a);
        auto const sampler = single_sampler(wp, cyl);
        Point2 const p{2.0 * a, 0.0};
        double const coarse = worst_residual(sampler, wp, p, 0.0, 2e-4);
        double const fine = worst_residual(sampler, wp, p, 0.0, 1e-4);
        CHECK(std::log2(coarse / fine) == doctest::Approx(2.0).epsilon(0.05));
        CHECK(std::abs(divergence_E(sampler, wp, p, 0.0, 1e-4)) < 1e-3);
    }

    SUBCASE("a corrupted field is detected")
    {
        auto const base = incident_sampler(wp);
        EMSampler const corrupted = [&](Point2 p, double z) {
            EMField f = base(p, z);
            f.H[2] = 0.1;
            return f;
        };
        auto const r = maxwell_residual(corrupted, wp, {0.3, -0.2}, 0.4, 0.01);
        CHECK(r[0] >= 0.01);
    }

    CHECK_THROWS_AS(maxwell_residual(incident_sampler(wp), wp, {0.0, 0.0}, 0.0, 0.0), InvalidArgument);
}

TEST_CASE("far-field decay")
{
    auto const wp = WaveParams::make(1.0, 1.0, 1.0, 1.0, 0.0);
    std::vector<double> const radii{50.0, 100.0, 200.0, 400.0};

    SUBCASE("outgoing Hankel wave")
    {
        auto const v = [](Point2 p) { return specfun::hankel1(0, norm(p)); };
        DecayFit const fit = radiation_decay_check(v, wp, radii);
        CHECK(fit.exponent == doctest::Approx(-0.5).epsilon(0.02));
        for (std::size_t k = 1; k < radii.size(); ++k)
        {
            CHECK(fit.radiation_residual[k] < fit.radiation_residual[k - 1]);
        }
    }

    SUBCASE("constant field does not decay")
    {
        DecayFit const fit = radiation_decay_check([](Point2) { return Complex{2.0, 1.0}; }, wp, radii);
        CHECK(std::abs(fit.exponent) < 1e-12);
    }

    SUBCASE("single scatterer")
    {
        auto const cyl = Cylinder::make({0.2, -0.3}, 1e-3);
        auto const v = [&](Point2 p) { return scattered_field_single(wp, cyl, p) - incident_u0(wp, p); };
        DecayFit const fit = radiation_decay_check(v, wp, radii, cyl.center);
        CHECK(std::abs(fit.exponent + 0.5) <= 0.05);
    }

    SUBCASE("input validation")
    {
        auto const v = [](Point2) { return Complex{1.0, 0.0}; };
        std::vector<double> const two{1.0, 2.0};
        std::vector<double> const unordered{1.0, 3.0, 2.0};
        std::vector<double> const negative{-1.0, 2.0, 3.0};
        CHECK_THROWS_AS(radiation_decay_check(v, wp, two), InvalidArgument);
        CHECK_THROWS_AS(radiation_decay_check(v, wp, unordered), InvalidArgument);
        CHECK_THROWS_AS(radiation_decay_check(v, wp, negative), InvalidArgument);
    }
}
