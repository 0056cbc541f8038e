#include "thinscat/waves.hpp"

#include <string>

#include "thinscat/error.hpp"

namespace thinscat {
namespace {

void require_positive(double value, char const* name)
{
    if (!(value > 0.0) || !std::isfinite(value))
    {
        throw InvalidArgument(std::string(name) + " must be positive and finite, got "
                              + std::to_string(value));
    }
}

void require_passive(Complex zeta)
{
    if (!std::isfinite(zeta.real()) || !std::isfinite(zeta.imag()))
    {
        throw InvalidArgument("zeta must be finite");
    }
    if (zeta.real() < 0.0)
    {
        throw InvalidArgument("Re zeta must be >= 0 (passive material), got "
                              + std::to_string(zeta.real()));
    }
    if (zeta == Complex{})
    {
        throw InvalidArgument("zeta = 0 (perfectly conducting limit) is not supported");
    }
}

}  // namespace

WaveParams WaveParams::make(double omega, double mu, double epsilon, Complex zeta, double k3)
{
    require_positive(omega, "omega");
    require_positive(mu, "mu");
    require_positive(epsilon, "epsilon");
    require_passive(zeta);

    WaveParams wp;
    wp.omega_ = omega;
    wp.mu_ = mu;
    wp.epsilon_ = epsilon;
    wp.zeta_ = zeta;
    wp.n0_sq_ = epsilon * mu;
    wp.k_ = omega * std::sqrt(epsilon * mu);
    if (!(k3 >= 0.0) || !(k3 < wp.k_))
    {
        throw InvalidArgument("k3 must satisfy 0 <= k3 < k = " + std::to_string(wp.k_)
                              + ", got " + std::to_string(k3));
    }
    wp.k3_ = k3;
    wp.kappa_ = std::sqrt((wp.k_ - k3) * (wp.k_ + k3));
    wp.xi_ = omega * mu * wp.kappa_ * wp.kappa_ / (zeta * wp.k_ * wp.k_);
    return wp;
}

WaveParams WaveParams::from_wavenumbers(double k, double kappa, Complex zeta, double mu,
                                        double omega)
{
    require_positive(k, "k");
    require_positive(kappa, "kappa");
    require_positive(mu, "mu");
    require_positive(omega, "omega");
    if (kappa > k)
    {
        throw InvalidArgument("kappa must not exceed k");
    }
    double const epsilon = k * k / (omega * omega * mu);
    double const k3 = std::sqrt((k - kappa) * (k + kappa));
    WaveParams wp = make(omega, mu, epsilon, zeta, k3);
    // Keep the caller's kappa bit-exact rather than the re-derived value.
    wp.k_ = k;
    wp.kappa_ = kappa;
    wp.xi_ = omega * mu * kappa * kappa / (zeta * k * k);
    return wp;
}

Complex incident_u0(WaveParams const& wp, Point2 p)
{
    return std::polar(1.0, wp.kappa() * p.y);
}

Gradient incident_u0_grad(WaveParams const& wp, Point2 p)
{
    Complex const u0 = incident_u0(wp, p);
    return {Complex{}, Complex{0.0, wp.kappa()} * u0};
}

}  // namespace thinscat
