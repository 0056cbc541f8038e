#include <random>

#include "doctest.h"
#include "thinscat/dense_solver.hpp"
#include "thinscat/error.hpp"

using namespace thinscat;
using Complex = std::complex<double>;

namespace {

ComplexMatrix random_matrix(int n, unsigned seed, double diagonal)
{
    std::mt19937_64 rng(seed);
    std::normal_distribution<double> gauss;
    ComplexMatrix a(n, n);
    for (int i = 0; i < n; ++i)
    {
        for (int j = 0; j < n; ++j)
        {
            a(i, j) = Complex{gauss(rng), gauss(rng)} / double(n);
        }
        a(i, i) += diagonal;
    }
    return a;
}

}  // namespace

TEST_CASE("solves a well-conditioned system")
{
    ComplexMatrix const a = random_matrix(60, 1, 1.0);
    ComplexVector x_true(60);
    for (int i = 0; i < 60; ++i)
    {
        x_true(i) = Complex{std::cos(0.3 * i), std::sin(0.7 * i)};
    }
    ComplexVector const b = a * x_true;
    DenseSolveResult const res = solve_dense(a, b);
    CHECK((res.x - x_true).norm() <= 1e-13 * x_true.norm());
    CHECK(res.residual <= 1e-14 * res.rhs_norm);
    CHECK(res.rcond > 0.1);
    CHECK(res.rcond <= 1.0);
}

TEST_CASE("hand-solved 2x2 system")
{
    ComplexMatrix a(2, 2);
    a << Complex{2.0, 1.0}, Complex{0.0, 1.0}, Complex{1.0, 0.0}, Complex{3.0, -1.0};
    ComplexVector b(2);
    b << Complex{1.0, 0.0}, Complex{0.0, 2.0};
    Complex const det = a(0, 0) * a(1, 1) - a(0, 1) * a(1, 0);
    Complex const x0 = (b(0) * a(1, 1) - a(0, 1) * b(1)) / det;
    Complex const x1 = (a(0, 0) * b(1) - b(0) * a(1, 0)) / det;
    DenseSolveResult const res = solve_dense(a, b);
    CHECK(std::abs(res.x(0) - x0) < 1e-15);
    CHECK(std::abs(res.x(1) - x1) < 1e-15);
}

TEST_CASE("refinement does not make an ill-conditioned solve worse")
{
    int const n = 12;
    ComplexMatrix a(n, n);
    for (int i = 0; i < n; ++i)
    {
        for (int j = 0; j < n; ++j)
        {
            a(i, j) = 1.0 / double(i + j + 1);  // Hilbert, rcond ~ 1e-16 at n = 12
        }
    }
    a += 1e-8 * ComplexMatrix::Identity(n, n);
    ComplexVector const b = ComplexVector::Ones(n);
    DenseSolveResult const res = solve_dense(a, b, 0);
    DenseSolveResult const refined = solve_dense(a, b, 5);
    CHECK(refined.residual <= res.residual);
    CHECK(refined.refinement_steps <= 5);
}

TEST_CASE("singular matrices are rejected with a condition estimate")
{
    ComplexMatrix a = random_matrix(5, 3, 0.0);
    a.row(4) = a.row(0) + 2.0 * a.row(1);
    ComplexVector const b = ComplexVector::Ones(5);
    try
    {
        solve_dense(a, b);
        FAIL("expected SingularMatrixError");
    }
    catch (SingularMatrixError const& e)
    {
        CHECK(e.rcond() < singular_rcond_threshold);
    }
    CHECK_THROWS_AS(solve_dense(ComplexMatrix::Zero(3, 3), ComplexVector::Ones(3)), NumericalError);
}

TEST_CASE("dimension checks and the empty system")
{
    CHECK_THROWS_AS(solve_dense(ComplexMatrix::Identity(3, 2), ComplexVector::Ones(3)), InvalidArgument);
    CHECK_THROWS_AS(solve_dense(ComplexMatrix::Identity(3, 3), ComplexVector::Ones(2)), InvalidArgument);
    DenseSolveResult const res = solve_dense(ComplexMatrix(0, 0), ComplexVector(0));
    CHECK(res.x.size() == 0);
}
