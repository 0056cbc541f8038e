#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <vector>

#include "thinscat/multi.hpp"
#include "thinscat/waves.hpp"

namespace thinscat {

//! Axis-aligned rectangle [xmin, xmax] x [ymin, ymax].
struct Rect
{
    double xmin = 0.0;
    double xmax = 1.0;
    double ymin = 0.0;
    double ymax = 1.0;

    double width() const noexcept { return xmax - xmin; }
    double height() const noexcept { return ymax - ymin; }
    double area() const noexcept { return width() * height(); }
    bool contains(Point2 p) const noexcept
    {
        return p.x >= xmin && p.x <= xmax && p.y >= ymin && p.y <= ymax;
    }
};

/*!
 * Scatterer density N(x) >= 0 on a rectangular domain D: the number of
 * cylinders of radius a in a region Delta is (1 / 2 pi a) int_Delta N.
 */
class DensityField
{
  public:
    using Sampler = std::function<double(Point2)>;

    /*!
     * Validates on a 64 x 64 sample grid that N is finite and non-negative
     * and that neighboring samples differ by at most max_jump (a discrete
     * stand-in for continuity).
     */
    static DensityField make(Rect domain, Sampler density, double max_jump = 1e300);
    static DensityField constant(Rect domain, double value);

    Rect const& domain() const noexcept { return domain_; }
    //! N(p) inside the domain, 0 outside.
    double operator()(Point2 p) const;
    bool is_constant() const noexcept { return constant_; }

    //! int_sub N over sub clipped to the domain, tensor Gauss-Legendre per cell
    //! of a cells x cells partition.
    double integral(Rect sub, int cells = 32) const;

  private:
    Rect domain_;
    Sampler density_;
    bool constant_ = false;
};

//! Number of cells of the cell-centered collocation grid.
struct GridSpec
{
    std::size_t nx = 0;
    std::size_t ny = 0;
};

/*!
 * Complex values at the centers of an nx x ny partition of a rectangle into
 * square cells of side h.
 */
class GridField
{
  public:
    GridField(Rect rect, std::size_t nx, std::size_t ny);

    Rect const& rect() const noexcept { return rect_; }
    std::size_t nx() const noexcept { return nx_; }
    std::size_t ny() const noexcept { return ny_; }
    double h() const noexcept { return h_; }
    std::size_t size() const noexcept { return values_.size(); }

    Point2 node(std::size_t i, std::size_t j) const
    {
        return {rect_.xmin + (double(i) + 0.5) * h_, rect_.ymin + (double(j) + 0.5) * h_};
    }
    std::size_t index(std::size_t i, std::size_t j) const noexcept { return j * nx_ + i; }
    Complex& at(std::size_t i, std::size_t j) { return values_.at(index(i, j)); }
    Complex at(std::size_t i, std::size_t j) const { return values_.at(index(i, j)); }
    std::vector<Complex>& values() noexcept { return values_; }
    std::vector<Complex> const& values() const noexcept { return values_; }

    //! Relative residual ||A u - rhs|| / ||rhs|| of the solve that produced it.
    double solve_residual = 0.0;

  private:
    Rect rect_;
    std::size_t nx_;
    std::size_t ny_;
    double h_;
    std::vector<Complex> values_;
};

//! Tensor cubic Lagrange interpolation on the 4 x 4 nearest nodes; the
//! stencil is shifted inward near the edges. Requires nx, ny >= 4.
Complex interpolate_bicubic(GridField const& field, Point2 p);

//---------------------------------------------------------------------------//
// Center distribution
//---------------------------------------------------------------------------//

struct DistributionOptions
{
    //! Partition squares have side cell_scale * a^{1/4}.
    double cell_scale = 1.0;
    //! Minimum separation d = max(10 a, separation_coefficient * sqrt(a)).
    double separation_coefficient = 1.0;
    std::size_t max_scatterers = 10000;
};

/*!
 * Place cylinder centers of radius a so that each partition square Delta_p
 * receives about N(y_p) |Delta_p| / (2 pi a) points. Counts are rounded by
 * two-dimensional error diffusion, so the total is within 1/2 of the exact
 * count and the rounding error does not pile up along rows or columns.
 *
 * Each square holds a shifted rank-1 lattice whose shifts keep the counting
 * error along every straight edge of squares bounded. Points are at least
 * d = max(10 a, separation_coefficient sqrt(a)) apart. Deterministic for a
 * given seed (squares are filled in raster order). Throws CapacityError
 * when a square cannot hold its points at separation d or the count exceeds
 * max_scatterers.
 */
ScattererSet distribute_centers(DensityField const& density, double a, std::uint64_t seed,
                                DistributionOptions const& options = {});

//---------------------------------------------------------------------------//
// Limiting integral equation
//---------------------------------------------------------------------------//

struct NystromOptions
{
    std::size_t max_unknowns = 10000;
    //! Cells per wavelength required: h <= (2 pi / kappa) / min_cells_per_wavelength.
    double min_cells_per_wavelength = 10.0;
};

/*!
 * Collocation solution of u = u0 + i xi int_D g N u at the cell centers of
 * grid over the density's domain.
 *
 * Off-diagonal cells use the midpoint rule. The self cell integrates the
 * small-argument form alpha + ln(1/r) / (2 pi) of g analytically over the
 * disc of equal area.
 */
GridField nystrom_solve(WaveParams const& wp, DensityField const& density, GridSpec grid,
                        NystromOptions const& options = {});

/*!
 * Right-hand side u0(p) + i xi int_D g(p, y) N(y) u(y) dy of the integral
 * equation at an arbitrary point, with u taken from the bicubic interpolant
 * of field. The cells within one cell of p use Gauss rules (Duffy-mapped
 * triangles in the cell containing p); the rest use the midpoint rule.
 */
Complex integral_equation_rhs(WaveParams const& wp, DensityField const& density,
                              GridField const& field, Point2 p);

struct PdeResidual
{
    double max_residual = 0.0;  //!< max |lap u + kappa^2 u + i xi N u| / max |u|
    std::size_t i = 0;          //!< node attaining the maximum
    std::size_t j = 0;
    std::vector<double> node_residual;  //!< normalized, 0 outside the margin
};

/*!
 * Five-point residual of lap u + kappa^2 u + i xi N u = 0 over nodes at
 * least margin_nodes (>= 2) from the grid edge.
 */
PdeResidual pde_residual(WaveParams const& wp, DensityField const& density,
                         GridField const& u, std::size_t margin_nodes = 2);

//---------------------------------------------------------------------------//
// Refraction coefficient
//---------------------------------------------------------------------------//

struct RefractionResult
{
    Complex n_sq;        //!< n0^2 (1 + i xi N / k^2)
    double n0_sq = 0.0;
    Complex xi;
    double N = 0.0;
    Complex kappa_N_sq;  //!< kappa^2 + i xi N
};

RefractionResult refraction(WaveParams const& wp, double N);

/*!
 * Density N >= 0 with refraction(wp, N).n_sq == target.
 *
 * N = k^2 (target / n0^2 - 1) / (i xi) must be real within 1e-9 relative;
 * otherwise InfeasibleTarget reports the imaginary residual. A negative N
 * also raises InfeasibleTarget.
 */
double design_density(WaveParams const& wp, Complex target_n_sq);

//! kappa_N^2 = kappa^2 + i xi N of the unbounded homogenized medium.
Complex effective_kappa_sq(WaveParams const& wp, double N);

//! exp(i kappa_N y) with Im kappa_N >= 0: exact solution of the homogenized
//! equation when N is constant on the whole plane (infinite-medium
//! idealization, not the finite-D solution).
Complex effective_plane_wave(WaveParams const& wp, double N, Point2 p);

}  // namespace thinscat
