#pragma once

#include <array>
#include <cmath>
#include <complex>

namespace thinscat {

using Complex = std::complex<double>;

//! A point (x, y) in the cross-section plane.
struct Point2
{
    double x = 0.0;
    double y = 0.0;

    friend constexpr Point2 operator+(Point2 a, Point2 b) { return {a.x + b.x, a.y + b.y}; }
    friend constexpr Point2 operator-(Point2 a, Point2 b) { return {a.x - b.x, a.y - b.y}; }
    friend constexpr Point2 operator*(double s, Point2 a) { return {s * a.x, s * a.y}; }
    friend constexpr bool operator==(Point2, Point2) = default;
};

inline double norm(Point2 p)
{
    return std::hypot(p.x, p.y);
}

inline double distance(Point2 a, Point2 b)
{
    return norm(a - b);
}

//! Gradient (d/dx, d/dy) of a complex scalar field.
using Gradient = std::array<Complex, 2>;

/*!
 * Frequency, material constants and the derived wave numbers of the
 * E-wave problem.
 *
 * The scalar problem lives in the cross-section plane with transverse wave
 * number kappa; k3 is the axial wave number and xi the reduced impedance
 * entering the boundary condition u_n + i xi u = 0.
 */
class WaveParams
{
  public:
    /*!
     * Construct from (omega, mu, epsilon, zeta, k3) and derive
     * k = omega sqrt(epsilon mu), kappa = sqrt(k^2 - k3^2),
     * xi = omega mu kappa^2 / (zeta k^2).
     *
     * Rejects non-positive material constants, k3 outside [0, k), Re zeta < 0
     * (active material) and zeta = 0.
     */
    static WaveParams make(double omega, double mu, double epsilon, Complex zeta, double k3);

    //! Alternate parametrization by wave numbers; epsilon = k^2 / (omega^2 mu).
    static WaveParams from_wavenumbers(double k, double kappa, Complex zeta, double mu,
                                       double omega);

    double omega() const noexcept { return omega_; }
    double mu() const noexcept { return mu_; }
    double epsilon() const noexcept { return epsilon_; }
    Complex zeta() const noexcept { return zeta_; }
    double k() const noexcept { return k_; }
    double kappa() const noexcept { return kappa_; }
    double k3() const noexcept { return k3_; }
    Complex xi() const noexcept { return xi_; }
    //! Background refraction coefficient squared, n0^2 = epsilon mu.
    double n0_sq() const noexcept { return n0_sq_; }

  private:
    WaveParams() = default;

    double omega_ = 0;
    double mu_ = 0;
    double epsilon_ = 0;
    Complex zeta_;
    double k_ = 0;
    double kappa_ = 0;
    double k3_ = 0;
    Complex xi_;
    double n0_sq_ = 0;
};

//! Incident scalar wave u0 = exp(i kappa y).
Complex incident_u0(WaveParams const& wp, Point2 p);

//! Analytic gradient of incident_u0: (0, i kappa u0).
Gradient incident_u0_grad(WaveParams const& wp, Point2 p);

}  // namespace thinscat
