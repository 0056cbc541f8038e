#include "thinscat/emfields.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "thinscat/error.hpp"

namespace thinscat {
namespace {

constexpr Complex I{0.0, 1.0};

double norm3(Vec3c const& v)
{
    return std::sqrt(std::norm(v[0]) + std::norm(v[1]) + std::norm(v[2]));
}

struct Stencil
{
    EMField center;
    EMField east;
    EMField west;
    EMField north;
    EMField south;
};

Stencil sample_stencil(EMSampler const& sampler, Point2 p, double z, double h)
{
    if (!(h > 0.0))
    {
        throw InvalidArgument("finite-difference step h must be positive");
    }
    return {sampler(p, z), sampler({p.x + h, p.y}, z), sampler({p.x - h, p.y}, z),
            sampler({p.x, p.y + h}, z), sampler({p.x, p.y - h}, z)};
}

// curl F with d/dz = i k3 and central differences in x, y.
template <typename Get>
Vec3c curl(Stencil const& s, double k3, double h, Get get)
{
    auto dx = [&](int c) { return (get(s.east)[c] - get(s.west)[c]) / (2.0 * h); };
    auto dy = [&](int c) { return (get(s.north)[c] - get(s.south)[c]) / (2.0 * h); };
    auto dz = [&](int c) { return I * k3 * get(s.center)[c]; };
    return {dy(2) - dz(1), dz(0) - dx(2), dx(1) - dy(0)};
}

}  // namespace

Vec3c incident_E0(WaveParams const& wp, Point2 position, double z)
{
    Complex const phase = std::exp(I * (wp.kappa() * position.y + wp.k3() * z));
    return {Complex{}, -wp.k3() / wp.k() * phase, wp.kappa() / wp.k() * phase};
}

EMField reconstruct_EH(WaveParams const& wp, ScalarSample const& s)
{
    double const kappa = wp.kappa();
    double const kappa2 = kappa * kappa;
    double const scale = kappa / wp.k();  // U = (kappa / k) u
    Complex const axial = std::exp(I * wp.k3() * s.z);
    Complex const U = scale * s.u;
    Complex const Ux = scale * s.grad_u[0];
    Complex const Uy = scale * s.grad_u[1];

    Complex const e_factor = I * wp.k3() / kappa2 * axial;
    Complex const h_factor = wp.k() * wp.k() / (I * wp.omega() * wp.mu() * kappa2) * axial;

    EMField f;
    f.E = {e_factor * Ux, e_factor * Uy, U * axial};
    f.H = {h_factor * Uy, -h_factor * Ux, Complex{}};
    return f;
}

std::array<double, 2> maxwell_residual(EMSampler const& sampler, WaveParams const& wp,
                                       Point2 position, double z, double h)
{
    Stencil const s = sample_stencil(sampler, position, z, h);
    Vec3c const curl_e = curl(s, wp.k3(), h, [](EMField const& f) -> Vec3c const& { return f.E; });
    Vec3c const curl_h = curl(s, wp.k3(), h, [](EMField const& f) -> Vec3c const& { return f.H; });

    double hmax = 0.0;
    double emax = 0.0;
    for (EMField const* f : {&s.center, &s.east, &s.west, &s.north, &s.south})
    {
        hmax = std::max(hmax, norm3(f->H));
        emax = std::max(emax, norm3(f->E));
    }
    double const wmu = wp.omega() * wp.mu();
    double const weps = wp.omega() * wp.epsilon();
    Vec3c r1;
    Vec3c r2;
    for (int c = 0; c < 3; ++c)
    {
        r1[c] = curl_e[c] - I * wmu * s.center.H[c];
        r2[c] = curl_h[c] + I * weps * s.center.E[c];
    }
    double const n1 = hmax > 0.0 ? norm3(r1) / (wmu * hmax) : norm3(r1);
    double const n2 = emax > 0.0 ? norm3(r2) / (weps * emax) : norm3(r2);
    return {n1, n2};
}

Complex divergence_E(EMSampler const& sampler, WaveParams const& wp, Point2 position, double z,
                     double h)
{
    Stencil const s = sample_stencil(sampler, position, z, h);
    return (s.east.E[0] - s.west.E[0]) / (2.0 * h) + (s.north.E[1] - s.south.E[1]) / (2.0 * h)
           + I * wp.k3() * s.center.E[2];
}

DecayFit radiation_decay_check(std::function<Complex(Point2)> const& scattered,
                               WaveParams const& wp, std::span<double const> radii, Point2 center)
{
    if (radii.size() < 3)
    {
        throw InvalidArgument("radiation_decay_check: need at least 3 radii");
    }
    for (std::size_t k = 0; k < radii.size(); ++k)
    {
        if (!(radii[k] > 0.0) || (k > 0 && !(radii[k] > radii[k - 1])))
        {
            throw InvalidArgument("radiation_decay_check: radii must be positive and increasing");
        }
    }
    constexpr int directions = 16;
    double const kappa = wp.kappa();
    double const step = 1e-3 / kappa;

    DecayFit fit;
    std::vector<double> xs;
    std::vector<double> ys;
    for (double r : radii)
    {
        double magnitude = 0.0;
        double radiation = 0.0;
        for (int d = 0; d < directions; ++d)
        {
            double const theta = 2.0 * std::numbers::pi * (d + 0.5) / directions;
            Point2 const dir{std::cos(theta), std::sin(theta)};
            Complex const v = scattered(center + r * dir);
            Complex const dv
                = (scattered(center + (r + step) * dir) - scattered(center + (r - step) * dir))
                  / (2.0 * step);
            magnitude += std::abs(v);
            radiation += std::sqrt(r) * std::abs(dv - I * kappa * v);
        }
        xs.push_back(std::log(r));
        ys.push_back(std::log(magnitude / directions));
        fit.radiation_residual.push_back(radiation / directions);
    }
    double const n = double(xs.size());
    double sx = 0.0;
    double sy = 0.0;
    double sxx = 0.0;
    double sxy = 0.0;
    for (std::size_t k = 0; k < xs.size(); ++k)
    {
        sx += xs[k];
        sy += ys[k];
        sxx += xs[k] * xs[k];
        sxy += xs[k] * ys[k];
    }
    fit.exponent = (n * sxy - sx * sy) / (n * sxx - sx * sx);
    return fit;
}

}  // namespace thinscat
