#include "thinscat/dense_solver.hpp"

#include <cmath>
#include <string>

#include "thinscat/error.hpp"

namespace thinscat {

DenseSolveResult solve_dense(ComplexMatrix const& a, ComplexVector const& b, int max_refinements)
{
    if (a.rows() != a.cols() || a.rows() != b.size())
    {
        throw InvalidArgument("solve_dense: dimension mismatch");
    }
    DenseSolveResult out;
    out.rhs_norm = b.norm();
    if (a.rows() == 0)
    {
        out.x = ComplexVector(0);
        out.rcond = 1.0;
        return out;
    }

    Eigen::PartialPivLU<ComplexMatrix> lu(a);
    out.rcond = lu.rcond();
    if (!(out.rcond >= singular_rcond_threshold))
    {
        throw SingularMatrixError("solve_dense: matrix is numerically singular (rcond = "
                                      + std::to_string(out.rcond) + ")",
                                  out.rcond);
    }

    out.x = lu.solve(b);
    ComplexVector r = b - a * out.x;
    out.residual = r.norm();
    for (int step = 0; step < max_refinements && out.residual > 0.0; ++step)
    {
        ComplexVector candidate = out.x + lu.solve(r);
        ComplexVector r_new = b - a * candidate;
        double const res_new = r_new.norm();
        if (!(res_new < out.residual))
        {
            break;
        }
        out.x = std::move(candidate);
        r = std::move(r_new);
        out.residual = res_new;
        ++out.refinement_steps;
    }
    if (!out.x.allFinite())
    {
        throw SingularMatrixError("solve_dense: non-finite solution", out.rcond);
    }
    return out;
}

}  // namespace thinscat
