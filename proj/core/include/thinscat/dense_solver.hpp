#pragma once

#include <Eigen/Dense>

namespace thinscat {

using ComplexMatrix = Eigen::MatrixXcd;
using ComplexVector = Eigen::VectorXcd;

struct DenseSolveResult
{
    ComplexVector x;
    double residual = 0.0;  //!< ||b - A x||_2 after refinement
    double rhs_norm = 0.0;  //!< ||b||_2
    double rcond = 0.0;     //!< reciprocal 1-norm condition estimate
    int refinement_steps = 0;
};

//! Matrices whose reciprocal condition estimate falls below this are rejected.
inline constexpr double singular_rcond_threshold = 1e-14;

/*!
 * Solve A x = b by LU with partial pivoting followed by iterative
 * refinement. Refinement stops when the residual stops shrinking or after
 * max_refinements passes.
 *
 * Throws SingularMatrixError (carrying the condition estimate) when A is
 * numerically singular.
 */
DenseSolveResult solve_dense(ComplexMatrix const& a, ComplexVector const& b,
                             int max_refinements = 3);

}  // namespace thinscat
