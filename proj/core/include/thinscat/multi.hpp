#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "thinscat/dense_solver.hpp"
#include "thinscat/waves.hpp"

namespace thinscat {

/*!
 * Centers of M parallel cylinders of common radius a, pairwise at least
 * min_separation apart.
 */
class ScattererSet
{
  public:
    //! Default requirement d >= 10 a.
    static constexpr double default_separation_ratio = 10.0;

    /*!
     * Validate and construct. Requires a > 0, d > 2a, d >= ratio * a, and
     * pairwise center distances >= d (which also makes centers distinct).
     * An empty set is allowed.
     */
    static ScattererSet make(std::vector<Point2> centers, double radius, double min_separation,
                             double separation_ratio = default_separation_ratio);

    std::span<Point2 const> centers() const noexcept { return centers_; }
    Point2 center(std::size_t m) const { return centers_.at(m); }
    std::size_t size() const noexcept { return centers_.size(); }
    bool empty() const noexcept { return centers_.empty(); }
    double radius() const noexcept { return radius_; }
    double min_separation() const noexcept { return min_separation_; }

    //! Same set with centers reordered by perm (new m = old perm[m]).
    ScattererSet permuted(std::span<std::size_t const> perm) const;

  private:
    std::vector<Point2> centers_;
    double radius_ = 0.0;
    double min_separation_ = 0.0;
};

//! nx * ny centers on a grid over [x0, x1] x [y0, y1] (cell-centered), each
//! displaced uniformly by up to (cell - d) / 2 per axis, so separation >= d.
ScattererSet jittered_grid(Point2 lower, Point2 upper, std::size_t nx, std::size_t ny,
                           double radius, double min_separation, std::uint64_t seed);

struct LinearSystem
{
    ComplexMatrix matrix;
    ComplexVector rhs;
};

/*!
 * A_jj = 1, A_jm = -i 2 pi a xi g(x_j, x_m), rhs_j = u0(x_j).
 *
 * The matrix is complex symmetric. Rows are assembled in parallel.
 */
LinearSystem assemble_system(WaveParams const& wp, ScattererSet const& set);

enum class SolveMethod
{
    lu,          //!< dense LU with partial pivoting plus iterative refinement
    fixed_point  //!< u <- u0 + K u, falling back to LU if it stalls
};

struct SolveOptions
{
    SolveMethod method = SolveMethod::lu;
    //! Memory for the dense matrix is 16 M^2 bytes (1.6 GB at the default).
    std::size_t max_scatterers = 10000;
    double fixed_point_tolerance = 1e-10;
    int fixed_point_max_iterations = 200;
};

struct MultiSolution
{
    std::vector<Complex> u_e;  //!< effective field at each center
    std::vector<Complex> Q;    //!< charges i 2 pi a xi u_e
    double residual = 0.0;     //!< ||A u_e - rhs||_2
    double rhs_norm = 0.0;
    double rcond = 1.0;        //!< only meaningful when LU ran
    SolveMethod method_used = SolveMethod::lu;
    int iterations = 0;
};

/*!
 * Solve for the effective field at every center and derive the charges.
 *
 * Throws CapacityError above options.max_scatterers and SingularMatrixError
 * (with the condition estimate) for a singular system.
 */
MultiSolution solve_effective(WaveParams const& wp, ScattererSet const& set,
                              SolveOptions const& options = {});

//! A field value plus a flag raised when the point lies within 3a of a center.
struct FieldValue
{
    Complex value;
    bool near_scatterer = false;
};

//! u0(p) + i 2 pi a xi sum_m g(p, x_m) u_e(x_m). Throws SingularityError if p
//! lies within a of any center.
FieldValue total_field(WaveParams const& wp, ScattererSet const& set, MultiSolution const& sol,
                       Point2 p);

//! Analytic gradient of total_field.
Gradient total_field_grad(WaveParams const& wp, ScattererSet const& set,
                          MultiSolution const& sol, Point2 p);

//! Field acting on cylinder j: total field minus the j-th term. Defined at
//! p = x_j itself, where it reproduces sol.u_e[j].
FieldValue effective_field_at(WaveParams const& wp, ScattererSet const& set,
                              MultiSolution const& sol, std::size_t j, Point2 p);

struct CorrectionEstimate
{
    double ratio = 0.0;     //!< |Sigma_2| / |Sigma_1| estimate
    double sigma1 = 0.0;    //!< |sum_m g(p, x_m) Q_m|
    double sigma2 = 0.0;    //!< sum_m |Q_m| / (2 pi a) int_{S_m} |g(p,t) - g(p,x_m)| dt
    bool degenerate = false;  //!< Sigma_1 == 0; ratio is +inf
};

/*!
 * Size of the sum neglected when each layer is replaced by a point charge,
 * relative to the point-charge sum, at p. Uses the constant-density
 * surrogate sigma_m = Q_m / (2 pi a) and a periodic trapezoidal rule on each
 * circle.
 */
CorrectionEstimate correction_diagnostic(WaveParams const& wp, ScattererSet const& set,
                                         MultiSolution const& sol, Point2 p,
                                         int circle_points = 64);

}  // namespace thinscat
