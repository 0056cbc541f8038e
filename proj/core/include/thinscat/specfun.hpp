#pragma once

#include <complex>

namespace thinscat::specfun {

using Complex = std::complex<double>;

inline constexpr int max_order = 60;
inline constexpr double max_argument = 1e4;

//! Below this argument J_0, J_1, Y_0, Y_1 use ascending power series; above
//! it, the Hankel asymptotic expansion.
inline constexpr double asymptotic_crossover = 12.0;

inline constexpr double euler_gamma = 0.57721566490153286060651209008240243;

/*!
 * Bessel function of the first kind J_n(x), 0 <= n <= 60, 0 < x <= 1e4.
 *
 * Absolute error <= 1e-10 (relative for |J_n| > 1, which does not occur).
 * Throws DomainError outside the supported range.
 */
double bessel_j(int n, double x);

/*!
 * Bessel function of the second kind Y_n(x), 0 <= n <= 60, 0 < x <= 1e4.
 *
 * Absolute error <= 1e-10 for |Y_n| <= 1, relative 1e-10 otherwise. Throws
 * DomainError when the result overflows a double (large n, tiny x).
 */
double bessel_y(int n, double x);

//! H_n^(1)(x) = J_n(x) + i Y_n(x).
Complex hankel1(int n, double x);

//! Derivatives with respect to x, via J_n' = (J_{n-1} - J_{n+1}) / 2.
double bessel_j_prime(int n, double x);
double bessel_y_prime(int n, double x);
Complex hankel1_prime(int n, double x);

}  // namespace thinscat::specfun
