#include "thinscat/single.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include <boost/math/quadrature/tanh_sinh.hpp>

#include "thinscat/error.hpp"
#include "thinscat/specfun.hpp"

namespace thinscat {
namespace {

constexpr Complex I{0.0, 1.0};
constexpr double pi = std::numbers::pi;
constexpr int modal_min_order = 8;

double parity(int n)
{
    return (n % 2 == 0) ? 1.0 : -1.0;
}

// Bessel values for signed order via Z_{-n} = (-1)^n Z_n.
double j_signed(int n, double x)
{
    return n >= 0 ? specfun::bessel_j(n, x) : parity(n) * specfun::bessel_j(-n, x);
}

double jp_signed(int n, double x)
{
    return n >= 0 ? specfun::bessel_j_prime(n, x) : parity(n) * specfun::bessel_j_prime(-n, x);
}

Complex h_signed(int n, double x)
{
    return n >= 0 ? specfun::hankel1(n, x) : parity(n) * specfun::hankel1(-n, x);
}

Complex hp_signed(int n, double x)
{
    return n >= 0 ? specfun::hankel1_prime(n, x) : parity(n) * specfun::hankel1_prime(-n, x);
}

void require_outside(Cylinder const& cyl, Point2 p, char const* fn)
{
    if (!(distance(p, cyl.center) > cyl.radius))
    {
        throw SingularityError(std::string(fn) + ": point lies inside or on the cylinder");
    }
}

struct Polar
{
    double r;
    double theta;
};

Polar to_polar(Point2 center, Point2 p)
{
    Point2 const d = p - center;
    return {norm(d), std::atan2(d.y, d.x)};
}

}  // namespace

Cylinder Cylinder::make(Point2 center, double radius)
{
    if (!(radius > 0.0) || !std::isfinite(radius))
    {
        throw InvalidArgument("cylinder radius must be positive, got " + std::to_string(radius));
    }
    if (!std::isfinite(center.x) || !std::isfinite(center.y))
    {
        throw InvalidArgument("cylinder center must be finite");
    }
    return {center, radius};
}

Complex green(double kappa, Point2 p, Point2 q)
{
    double const r = distance(p, q);
    if (r == 0.0)
    {
        throw SingularityError("green: coincident source and observation points");
    }
    return 0.25 * I * specfun::hankel1(0, kappa * r);
}

Gradient green_grad(double kappa, Point2 p, Point2 q)
{
    Point2 const d = p - q;
    double const r = norm(d);
    if (r == 0.0)
    {
        throw SingularityError("green_grad: coincident source and observation points");
    }
    Complex const radial = -0.25 * I * kappa * specfun::hankel1(1, kappa * r);
    return {radial * (d.x / r), radial * (d.y / r)};
}

Complex alpha(double kappa)
{
    return 0.25 * I + std::log(2.0 / kappa) / (2.0 * pi);
}

Complex alpha_standard(double kappa)
{
    return alpha(kappa) - specfun::euler_gamma / (2.0 * pi);
}

Complex charge_asymptotic(WaveParams const& wp, Cylinder const& cyl, Complex u_at_center)
{
    return I * wp.xi() * u_at_center * (2.0 * pi * cyl.radius);
}

Complex scattered_field_single(WaveParams const& wp, Cylinder const& cyl, Point2 p)
{
    require_outside(cyl, p, "scattered_field_single");
    Complex const q = charge_asymptotic(wp, cyl, incident_u0(wp, cyl.center));
    return incident_u0(wp, p) + q * green(wp.kappa(), p, cyl.center);
}

Gradient scattered_field_single_grad(WaveParams const& wp, Cylinder const& cyl, Point2 p)
{
    require_outside(cyl, p, "scattered_field_single_grad");
    Complex const q = charge_asymptotic(wp, cyl, incident_u0(wp, cyl.center));
    Gradient grad = incident_u0_grad(wp, p);
    Gradient const g = green_grad(wp.kappa(), p, cyl.center);
    grad[0] += q * g[0];
    grad[1] += q * g[1];
    return grad;
}

Complex incident_fourier_coefficient(WaveParams const& wp, Point2 center, double r, int n)
{
    return incident_u0(wp, center) * j_signed(n, wp.kappa() * r);
}

//---------------------------------------------------------------------------//

Complex ModalCoeffs::scattered(Point2 p) const
{
    Polar const pol = to_polar(center, p);
    double const x = kappa * pol.r;
    Complex sum = coeff(0) * specfun::hankel1(0, x);
    for (int n = 1; n <= nmax; ++n)
    {
        Complex const h = specfun::hankel1(n, x);
        sum += h * (coeff(n) * std::polar(1.0, n * pol.theta)
                    + parity(n) * coeff(-n) * std::polar(1.0, -n * pol.theta));
    }
    return sum;
}

Complex ModalCoeffs::scattered_dr(Point2 p) const
{
    Polar const pol = to_polar(center, p);
    double const x = kappa * pol.r;
    Complex sum = coeff(0) * specfun::hankel1_prime(0, x);
    for (int n = 1; n <= nmax; ++n)
    {
        Complex const hp = specfun::hankel1_prime(n, x);
        sum += hp * (coeff(n) * std::polar(1.0, n * pol.theta)
                     + parity(n) * coeff(-n) * std::polar(1.0, -n * pol.theta));
    }
    return kappa * sum;
}

Complex ModalCoeffs::total(WaveParams const& wp, Point2 p) const
{
    return incident_u0(wp, p) + scattered(p);
}

Complex ModalCoeffs::total_dr(WaveParams const& wp, Point2 p) const
{
    Polar const pol = to_polar(center, p);
    // d/dr exp(i kappa (y_c + r sin theta)) = i kappa sin(theta) u0
    return I * wp.kappa() * std::sin(pol.theta) * incident_u0(wp, p) + scattered_dr(p);
}

Complex ModalCoeffs::far_field_charge() const
{
    return coeff(0) / (0.25 * I);
}

Complex ModalCoeffs::charge() const
{
    double const j0 = specfun::bessel_j(0, kappa * radius);
    if (j0 == 0.0)
    {
        throw ResonanceError("ModalCoeffs::charge: J_0(kappa a) vanishes");
    }
    return far_field_charge() / j0;
}

ModalCoeffs modal_solution_exact(WaveParams const& wp, Cylinder const& cyl, int nmax)
{
    if (nmax < modal_min_order || nmax > specfun::max_order)
    {
        throw InvalidArgument("modal_solution_exact: nmax must lie in [8, 60], got "
                              + std::to_string(nmax));
    }
    double const ka = wp.kappa() * cyl.radius;
    double const kappa = wp.kappa();
    Complex const xi = wp.xi();
    Complex const phase = incident_u0(wp, cyl.center);

    std::vector<Complex> pos;  // c_n, n >= 0
    std::vector<Complex> neg;  // c_{-n}, n >= 0
    double cmax = 0.0;
    bool converged = false;
    int used = nmax;

    auto mode = [&](int n) {
        Complex const hp = hp_signed(n, ka);
        Complex const h = h_signed(n, ka);
        Complex const den = kappa * hp + I * xi * h;
        double const scale = kappa * std::abs(hp) + std::abs(xi) * std::abs(h);
        if (!(std::abs(den) > 1e-13 * scale))
        {
            throw ResonanceError("modal_solution_exact: denominator of mode "
                                 + std::to_string(n) + " vanishes");
        }
        Complex const num = kappa * jp_signed(n, ka) + I * xi * j_signed(n, ka);
        return -phase * num / den;
    };

    for (int n = 0; n <= nmax; ++n)
    {
        Complex cp;
        Complex cn;
        try
        {
            cp = mode(n);
            cn = (n == 0) ? cp : mode(-n);
        }
        catch (DomainError const&)
        {
            // Y_n(kappa a) overflowed: the coefficient underflows to zero.
            if (n <= modal_min_order)
            {
                throw;
            }
            converged = true;
            used = n - 1;
            break;
        }
        pos.push_back(cp);
        neg.push_back(cn);
        cmax = std::max({cmax, std::abs(cp), std::abs(cn)});
        if (n >= modal_min_order && std::max(std::abs(cp), std::abs(cn)) < 1e-14 * cmax)
        {
            converged = true;
            used = n;
            break;
        }
    }

    ModalCoeffs out;
    out.nmax = used;
    out.converged = converged;
    out.center = cyl.center;
    out.radius = cyl.radius;
    out.kappa = kappa;
    out.xi = xi;
    out.c.resize(static_cast<std::size_t>(2 * used + 1));
    for (int n = 0; n <= used; ++n)
    {
        out.c[static_cast<std::size_t>(used + n)] = pos[static_cast<std::size_t>(n)];
        out.c[static_cast<std::size_t>(used - n)] = neg[static_cast<std::size_t>(n)];
    }
    return out;
}

//---------------------------------------------------------------------------//

Complex BoundaryDensity::density(double phi) const
{
    Complex sum;
    for (int n = -nmax; n <= nmax; ++n)
    {
        sum += sigma_hat[static_cast<std::size_t>(n + nmax)] * std::polar(1.0, n * phi);
    }
    return sum;
}

BoundaryDensity boundary_density_exact(WaveParams const& wp, Cylinder const& cyl, int nmax,
                                       BoundaryEquationOptions const& options)
{
    if (nmax < 4 || nmax > specfun::max_order)
    {
        throw InvalidArgument("boundary_density_exact: nmax must lie in [4, 60], got "
                              + std::to_string(nmax));
    }
    double const a = cyl.radius;
    double const kappa = wp.kappa();
    double const ka = kappa * a;
    Complex const xi = wp.xi();
    Complex const phase = incident_u0(wp, cyl.center);

    // Fourier data of u0_n + i xi u0 on the circle; the equation per mode is
    // f_n + lambda_n sigma_n = 0.
    auto incident = [&](int n) -> Complex {
        if (options.incident == IncidentData::exact)
        {
            return phase * (kappa * jp_signed(n, ka) + I * xi * j_signed(n, ka));
        }
        // n_2 = sin(phi) = (e^{i phi} - e^{-i phi}) / (2i)
        if (n == 0)
        {
            return phase * I * xi;
        }
        if (n == 1)
        {
            return phase * I * kappa / (2.0 * I);
        }
        if (n == -1)
        {
            return -phase * I * kappa / (2.0 * I);
        }
        return Complex{};
    };

    Complex const alpha_value = options.alpha == AlphaConvention::paper ? alpha(kappa)
                                                                        : alpha_standard(kappa);
    auto eigenvalue = [&](int n) -> Complex {
        if (options.kernel == KernelModel::exact)
        {
            // Single layer: (i pi a / 2) J_n H_n; exterior normal derivative:
            // (i pi kappa a / 2) J_n H_n'.
            return (I * pi * a / 2.0) * j_signed(n, ka)
                   * (kappa * hp_signed(n, ka) + I * xi * h_signed(n, ka));
        }
        // Exterior limit of the normal derivative of the log layer is
        // -sigma/2 + K' sigma with K' mode-0 eigenvalue -1/2 and zero otherwise;
        // the log layer has eigenvalues -a ln a (n = 0) and a / (2|n|).
        if (n == 0)
        {
            return I * xi * alpha_value * (2.0 * pi * a) - I * xi * a * std::log(a) - 1.0;
        }
        return I * xi * a / (2.0 * std::abs(n)) - 0.5;
    };

    BoundaryDensity out;
    out.nmax = nmax;
    out.radius = a;
    out.sigma_hat.resize(static_cast<std::size_t>(2 * nmax + 1));
    for (int n = -nmax; n <= nmax; ++n)
    {
        Complex const lambda = eigenvalue(n);
        Complex const f = incident(n);
        if (n == 0 && !(std::abs(lambda) > 1e-13))
        {
            throw SingularMatrixError("boundary_density_exact: mode-0 equation is singular",
                                      std::abs(lambda));
        }
        if (lambda == Complex{})
        {
            throw SingularMatrixError("boundary_density_exact: mode " + std::to_string(n)
                                          + " equation is singular",
                                      0.0);
        }
        out.sigma_hat[static_cast<std::size_t>(n + nmax)] = -f / lambda;
    }
    out.charge = 2.0 * pi * a * out.sigma_hat[static_cast<std::size_t>(nmax)];
    return out;
}

double circle_log_potential(double a)
{
    if (!(a > 0.0))
    {
        throw InvalidArgument("circle_log_potential: radius must be positive");
    }
    // |s - t| = 2 a sin(psi / 2); the integrand is symmetric about psi = pi.
    boost::math::quadrature::tanh_sinh<double> integrator;
    auto integrand = [a](double psi) {
        return -std::log(2.0 * a * std::sin(0.5 * psi)) / (2.0 * pi);
    };
    return 2.0 * a * integrator.integrate(integrand, 0.0, pi);
}

}  // namespace thinscat
