#pragma once

// Independent reference values for the tests. Nothing here calls into the
// library: Bessel functions are summed from their ascending series in 50
// digit arithmetic, which is exact to double precision for x <= 20.

#include <complex>

#include <boost/math/constants/constants.hpp>
#include <boost/multiprecision/cpp_bin_float.hpp>

namespace oracle {

using Big = boost::multiprecision::cpp_bin_float_50;

inline Big series_j(int n, Big const& x)
{
    Big const half = x / 2;
    Big lead = 1;
    for (int i = 1; i <= n; ++i)
    {
        lead *= half / i;
    }
    Big const q = -half * half;
    Big term = 1;
    Big sum = 1;
    for (int k = 1; k < 400; ++k)
    {
        term *= q / (Big(k) * Big(n + k));
        sum += term;
        if (k > 10 && abs(term) < Big("1e-60"))
        {
            break;
        }
    }
    return lead * sum;
}

// Y_n(x) = -(1/pi) (x/2)^-n sum_{k<n} (n-k-1)!/k! (x^2/4)^k
//          + (2/pi) ln(x/2) J_n(x)
//          - (1/pi) (x/2)^n sum_k [psi(k+1) + psi(n+k+1)] (-x^2/4)^k / (k! (n+k)!)
inline Big series_y(int n, Big const& x)
{
    Big const pi = boost::math::constants::pi<Big>();
    Big const gamma = boost::math::constants::euler<Big>();
    Big const half = x / 2;
    Big const q = half * half;

    Big finite = 0;
    if (n > 0)
    {
        Big fact_nk1 = 1;  // (n-1)!
        for (int i = 2; i <= n - 1; ++i)
        {
            fact_nk1 *= i;
        }
        Big term = fact_nk1;  // k = 0: (n-1)!/0! q^0
        for (int k = 0; k < n; ++k)
        {
            finite += term;
            if (k + 1 < n)
            {
                term *= q / (Big(k + 1) * Big(n - k - 1));
            }
        }
        finite /= pow(half, n);
    }

    auto psi = [&](int m) {  // psi(m + 1) = -gamma + H_m
        Big h = -gamma;
        for (int j = 1; j <= m; ++j)
        {
            h += Big(1) / j;
        }
        return h;
    };

    Big fact_n = 1;
    for (int i = 2; i <= n; ++i)
    {
        fact_n *= i;
    }
    Big term = Big(1) / fact_n;  // (-q)^k / (k! (n+k)!) at k = 0
    Big hk = -gamma;             // psi(k+1)
    Big hnk = psi(n);            // psi(n+k+1)
    Big sum = 0;
    for (int k = 0; k < 400; ++k)
    {
        Big const contrib = (hk + hnk) * term;
        sum += contrib;
        if (k > 10 && abs(contrib) < Big("1e-60"))
        {
            break;
        }
        term *= -q / (Big(k + 1) * Big(n + k + 1));
        hk += Big(1) / (k + 1);
        hnk += Big(1) / (n + k + 1);
    }
    sum *= pow(half, n);

    return -finite / pi + 2 / pi * log(half) * series_j(n, x) - sum / pi;
}

inline double j(int n, double x)
{
    return static_cast<double>(series_j(n, Big(x)));
}

inline double y(int n, double x)
{
    return static_cast<double>(series_y(n, Big(x)));
}

inline std::complex<double> h1(int n, double x)
{
    return {j(n, x), y(n, x)};
}

}  // namespace oracle
