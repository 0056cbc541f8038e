#include <cmath>
#include <numbers>
#include <random>

#include "doctest.h"
#include "thinscat/error.hpp"
#include "thinscat/waves.hpp"

using namespace thinscat;

TEST_CASE("derived quantities")
{
    SUBCASE("unit material, normal incidence")
    {
        auto const wp = WaveParams::make(1.0, 1.0, 1.0, 1.0, 0.0);
        CHECK(wp.k() == doctest::Approx(1.0));
        CHECK(wp.kappa() == doctest::Approx(1.0));
        CHECK(std::abs(wp.xi() - Complex{1.0, 0.0}) < 1e-15);
        CHECK(wp.n0_sq() == doctest::Approx(1.0));
    }
    SUBCASE("oblique incidence, reactive impedance")
    {
        auto const wp = WaveParams::make(1.0, 1.0, 1.0, Complex{0.0, 1.0}, 0.6);
        CHECK(wp.kappa() == doctest::Approx(0.8).epsilon(1e-14));
        CHECK(std::abs(wp.xi() - Complex{0.0, -0.64}) < 1e-14);
    }
    SUBCASE("relations hold to 1e-12")
    {
        auto const wp = WaveParams::make(2.3, 1.7, 0.9, Complex{0.4, -0.2}, 1.1);
        double const k2 = wp.omega() * wp.omega() * wp.epsilon() * wp.mu();
        CHECK(std::abs(wp.k() * wp.k() - k2) <= 1e-12 * k2);
        CHECK(std::abs(wp.kappa() * wp.kappa() + wp.k3() * wp.k3() - k2) <= 1e-12 * k2);
        Complex const xi = wp.omega() * wp.mu() * wp.kappa() * wp.kappa() / (wp.zeta() * k2);
        CHECK(std::abs(wp.xi() - xi) <= 1e-12 * std::abs(xi));
        CHECK(wp.n0_sq() == doctest::Approx(wp.epsilon() * wp.mu()));
    }
}

TEST_CASE("passive impedance gives Re xi >= 0")
{
    std::mt19937_64 rng(7);
    std::uniform_real_distribution<double> unit(0.05, 3.0);
    for (int trial = 0; trial < 200; ++trial)
    {
        double const omega = unit(rng);
        double const mu = unit(rng);
        double const eps = unit(rng);
        double const k = omega * std::sqrt(eps * mu);
        double const k3 = 0.99 * k * std::uniform_real_distribution<double>(0.0, 1.0)(rng);
        Complex const zeta{0.5, std::uniform_real_distribution<double>(-3.0, 3.0)(rng)};
        auto const wp = WaveParams::make(omega, mu, eps, zeta, k3);
        // xi is a positive multiple of 1/zeta, so Re xi carries the sign of Re zeta
        // while Im xi carries the opposite sign of Im zeta.
        CHECK(wp.xi().real() >= 0.0);
        CHECK(wp.xi().imag() * zeta.imag() <= 0.0);
    }
}

TEST_CASE("constructor rejects invalid inputs")
{
    CHECK_THROWS_AS(WaveParams::make(1.0, 1.0, 1.0, 1.0, 1.0), InvalidArgument);   // k3 = k
    CHECK_THROWS_AS(WaveParams::make(1.0, 1.0, 1.0, 1.0, 2.0), InvalidArgument);   // k3 > k
    CHECK_THROWS_AS(WaveParams::make(1.0, 1.0, 1.0, 1.0, -0.1), InvalidArgument);  // k3 < 0
    CHECK_THROWS_AS(WaveParams::make(1.0, 1.0, 1.0, Complex{-0.1, 1.0}, 0.0), InvalidArgument);
    CHECK_THROWS_AS(WaveParams::make(1.0, 1.0, 1.0, 0.0, 0.0), InvalidArgument);
    CHECK_THROWS_AS(WaveParams::make(0.0, 1.0, 1.0, 1.0, 0.0), InvalidArgument);
    CHECK_THROWS_AS(WaveParams::make(1.0, -1.0, 1.0, 1.0, 0.0), InvalidArgument);
    CHECK_THROWS_AS(WaveParams::make(1.0, 1.0, 0.0, 1.0, 0.0), InvalidArgument);
    CHECK_THROWS_AS(WaveParams::make(std::nan(""), 1.0, 1.0, 1.0, 0.0), InvalidArgument);
    // Purely reactive impedance is passive.
    CHECK_NOTHROW(WaveParams::make(1.0, 1.0, 1.0, Complex{0.0, -2.0}, 0.0));
}

TEST_CASE("wave-number round trip")
{
    auto const a = WaveParams::make(1.4, 0.8, 1.3, Complex{1.0, 0.5}, 0.7);
    auto const b = WaveParams::from_wavenumbers(a.k(), a.kappa(), a.zeta(), a.mu(), a.omega());
    CHECK(b.epsilon() == doctest::Approx(a.epsilon()).epsilon(1e-12));
    CHECK(b.k3() == doctest::Approx(a.k3()).epsilon(1e-12));
    CHECK(std::abs(b.xi() - a.xi()) <= 1e-12 * std::abs(a.xi()));
    CHECK(b.n0_sq() == doctest::Approx(a.n0_sq()).epsilon(1e-12));
    CHECK_THROWS_AS(WaveParams::from_wavenumbers(1.0, 1.5, 1.0, 1.0, 1.0), InvalidArgument);
}

TEST_CASE("incident wave")
{
    auto const wp = WaveParams::make(1.0, 1.0, 1.0, 1.0, 0.0);
    CHECK(std::abs(incident_u0(wp, {0.3, 0.0}) - Complex{1.0, 0.0}) < 1e-15);
    CHECK(std::abs(incident_u0(wp, {0.0, std::numbers::pi / 2}) - Complex{0.0, 1.0}) < 1e-15);

    std::mt19937_64 rng(3);
    std::uniform_real_distribution<double> coord(-50.0, 50.0);
    for (int i = 0; i < 100; ++i)
    {
        Point2 const p{coord(rng), coord(rng)};
        CHECK(std::abs(incident_u0(wp, p)) == doctest::Approx(1.0).epsilon(1e-14));
        Gradient const g = incident_u0_grad(wp, p);
        CHECK(std::abs(g[0]) == 0.0);
        CHECK(std::abs(g[1] - Complex{0.0, wp.kappa()} * incident_u0(wp, p)) < 1e-14);
    }
}

TEST_CASE("incident wave solves the Helmholtz equation to O(h^2)")
{
    auto const wp = WaveParams::make(2.0, 1.0, 1.0, 1.0, 1.2);
    double const k2 = wp.kappa() * wp.kappa();
    auto residual = [&](double h) {
        double worst = 0.0;
        for (double x = -1.0; x <= 1.0; x += 0.25)
        {
            for (double y = -1.0; y <= 1.0; y += 0.25)
            {
                Complex const c = incident_u0(wp, {x, y});
                Complex const lap = (incident_u0(wp, {x + h, y}) + incident_u0(wp, {x - h, y})
                                     + incident_u0(wp, {x, y + h}) + incident_u0(wp, {x, y - h})
                                     - 4.0 * c)
                                    / (h * h);
                worst = std::max(worst, std::abs(lap + k2 * c));
            }
        }
        return worst;
    };
    double const coarse = residual(0.02);
    double const fine = residual(0.01);
    CHECK(std::log2(coarse / fine) == doctest::Approx(2.0).epsilon(0.05));
}
