#pragma once

#include <vector>

#include "thinscat/waves.hpp"

namespace thinscat {

//! Circular cylinder cross-section: a disc of radius a about center.
struct Cylinder
{
    Point2 center;
    double radius = 0.0;

    //! Validated construction; throws InvalidArgument unless radius > 0.
    static Cylinder make(Point2 center, double radius);
};

//---------------------------------------------------------------------------//
// Green's function of the 2-D Helmholtz operator
//---------------------------------------------------------------------------//

//! g(p, q) = (i/4) H_0^(1)(kappa |p - q|). Throws SingularityError if p == q.
Complex green(double kappa, Point2 p, Point2 q);

//! Gradient of g with respect to p: -(i kappa / 4) H_1^(1)(kappa r) (p - q) / r.
Gradient green_grad(double kappa, Point2 p, Point2 q);

//! The small-argument constant i/4 + ln(2/kappa)/(2 pi) exactly as stated in
//! the asymptotic analysis. Diagnostic only: it omits the Euler-Mascheroni
//! term, see alpha_standard().
Complex alpha(double kappa);

//! Constant term of g(kappa r) - ln(1/r)/(2 pi) as r -> 0, including the
//! -gamma/(2 pi) contribution of the standard H_0^(1) expansion.
Complex alpha_standard(double kappa);

//---------------------------------------------------------------------------//
// Thin-cylinder asymptotics
//---------------------------------------------------------------------------//

//! Total charge Q = i xi u 2 pi a of a thin cylinder in the field u.
Complex charge_asymptotic(WaveParams const& wp, Cylinder const& cyl, Complex u_at_center);

//! Asymptotic total field u0(p) + i 2 pi a xi g(p, center) u0(center).
//! Throws SingularityError for |p - center| <= a.
Complex scattered_field_single(WaveParams const& wp, Cylinder const& cyl, Point2 p);

//! Analytic gradient of scattered_field_single.
Gradient scattered_field_single_grad(WaveParams const& wp, Cylinder const& cyl, Point2 p);

//---------------------------------------------------------------------------//
// Exact disc solution by separation of variables
//---------------------------------------------------------------------------//

//! Fourier coefficient of the incident wave on the circle |p - center| = r,
//! u0 = sum_n coefficient_n e^{i n theta} with theta measured from +x.
//! Jacobi-Anger for exp(i kappa r sin theta) gives J_n(kappa r).
Complex incident_fourier_coefficient(WaveParams const& wp, Point2 center, double r, int n);

/*!
 * Scattering coefficients of u = u0 + sum_n c_n H_n^(1)(kappa r) e^{i n theta}
 * for the impedance condition du/dr + i xi u = 0 at r = a.
 */
struct ModalCoeffs
{
    int nmax = 0;
    std::vector<Complex> c;  //!< c[n + nmax] for n = -nmax..nmax
    bool converged = false;  //!< |c_nmax| < 1e-14 max |c_n| was reached
    Point2 center;
    double radius = 0.0;
    double kappa = 0.0;
    Complex xi;

    Complex coeff(int n) const { return c.at(static_cast<std::size_t>(n + nmax)); }

    //! Scattered part sum_n c_n H_n(kappa r) e^{i n theta}.
    Complex scattered(Point2 p) const;
    //! Radial derivative of the scattered part about the disc center.
    Complex scattered_dr(Point2 p) const;
    //! Total field u0 + scattered.
    Complex total(WaveParams const& wp, Point2 p) const;
    //! du/dr of the total field.
    Complex total_dr(WaveParams const& wp, Point2 p) const;

    //! Monopole strength in units of g: scattered ~ far_field_charge() g(p, center).
    Complex far_field_charge() const;
    //! Integral of the boundary density of the equivalent single layer on the
    //! circle, comparable with BoundaryDensity::charge.
    Complex charge() const;
};

//! Exact coefficients, truncated adaptively between order 8 and nmax (<= 60).
//! Throws ResonanceError if a per-mode denominator vanishes.
ModalCoeffs modal_solution_exact(WaveParams const& wp, Cylinder const& cyl, int nmax = 60);

//---------------------------------------------------------------------------//
// Boundary integral equation for the layer density
//---------------------------------------------------------------------------//

enum class KernelModel
{
    exact,          //!< full Helmholtz single layer, diagonalized by addition theorem
    log_asymptotic  //!< alpha Q + log kernel + constant normal-derivative kernel
};

enum class AlphaConvention
{
    paper,     //!< alpha() as stated, without Euler-Mascheroni
    standard   //!< alpha_standard()
};

enum class IncidentData
{
    exact,   //!< exact Fourier data of u0 and du0/dn on the circle
    leading  //!< u0 ~ u0(center), du0/dn ~ i kappa n_2 u0(center)
};

struct BoundaryEquationOptions
{
    KernelModel kernel = KernelModel::exact;
    AlphaConvention alpha = AlphaConvention::standard;
    IncidentData incident = IncidentData::exact;
};

//! Fourier representation of the layer density sigma on the circle.
struct BoundaryDensity
{
    int nmax = 0;
    double radius = 0.0;
    std::vector<Complex> sigma_hat;  //!< sigma_hat[n + nmax]
    Complex charge;                  //!< Q = 2 pi a sigma_hat_0

    //! sigma at polar angle phi on the circle.
    Complex density(double phi) const;
};

/*!
 * Solve the boundary equation for sigma mode by mode on the circle.
 *
 * On a circle the normal derivative of the log kernel is the constant
 * -1/(4 pi a), and both the log and the Helmholtz single layer are diagonal
 * in e^{i n phi}, so each mode is a scalar equation. Throws
 * SingularMatrixError if the mode-0 equation degenerates.
 */
BoundaryDensity boundary_density_exact(WaveParams const& wp, Cylinder const& cyl, int nmax = 16,
                                       BoundaryEquationOptions const& options = {});

//! Integral over the circle of radius a of ln(1/|s - t|)/(2 pi) dt for fixed
//! s on the circle, by tanh-sinh quadrature. Equals a ln(1/a).
double circle_log_potential(double a);

}  // namespace thinscat
