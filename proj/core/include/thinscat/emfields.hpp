#pragma once

#include <array>
#include <functional>
#include <span>
#include <vector>

#include "thinscat/waves.hpp"

namespace thinscat {

using Vec3c = std::array<Complex, 3>;

//! Electric and magnetic field at one point. E-waves only: H[2] == 0.
struct EMField
{
    Vec3c E{};
    Vec3c H{};
};

//! Scalar field value and its in-plane gradient at (position, z).
struct ScalarSample
{
    Complex u;
    Gradient grad_u{};
    Point2 position;
    double z = 0.0;
};

//! E0 = k^{-1} exp(i kappa y + i k3 z) (-k3 e_2 + kappa e_3).
Vec3c incident_E0(WaveParams const& wp, Point2 position, double z);

/*!
 * Vector field of an E-wave from its scalar potential u, with U = (kappa/k) u:
 *
 *   E = (i k3 / kappa^2) (U_x, U_y, kappa^2 / (i k3) U) e^{i k3 z}
 *   H = k^2 / (i omega mu kappa^2) (U_y, -U_x, 0) e^{i k3 z}
 */
EMField reconstruct_EH(WaveParams const& wp, ScalarSample const& s);

using EMSampler = std::function<EMField(Point2, double)>;

/*!
 * Normalized Maxwell residuals (||curl E - i omega mu H||, ||curl H + i omega
 * epsilon E||) at (position, z). In-plane derivatives use central
 * differences with step h; the z derivative is the factor i k3 of the
 * e^{i k3 z} dependence. Normalized by omega mu max||H|| and
 * omega epsilon max||E|| over the stencil.
 */
std::array<double, 2> maxwell_residual(EMSampler const& sampler, WaveParams const& wp,
                                       Point2 position, double z, double h);

//! Central-difference divergence of E at (position, z), z handled as above.
Complex divergence_E(EMSampler const& sampler, WaveParams const& wp, Point2 position, double z,
                     double h);

struct DecayFit
{
    double exponent = 0.0;  //!< least-squares slope of log|v| against log r
    //! sqrt(r) |dv/dr - i kappa v| averaged over directions, one per radius.
    std::vector<double> radiation_residual;
};

/*!
 * Fit the far-field decay of a scattered field sampled on circles about
 * center: |v| is averaged over 16 directions at each radius. Requires at
 * least 3 increasing radii.
 */
DecayFit radiation_decay_check(std::function<Complex(Point2)> const& scattered,
                               WaveParams const& wp, std::span<double const> radii,
                               Point2 center = {});

}  // namespace thinscat
