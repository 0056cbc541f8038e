#include "thinscat/specfun.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "thinscat/error.hpp"

namespace thinscat::specfun {
namespace {

using Long = long double;

constexpr Long pi_l = 3.141592653589793238462643383279502884L;
constexpr Long gamma_l = 0.577215664901532860606512090082402431L;

void check_domain(int n, double x, char const* fn)
{
    if (!(x > 0.0) || !(x <= max_argument))
    {
        throw DomainError(std::string(fn) + ": argument x = " + std::to_string(x)
                          + " outside (0, 1e4]");
    }
    if (n < 0 || n > max_order)
    {
        throw DomainError(std::string(fn) + ": order n = " + std::to_string(n)
                          + " outside [0, 60]");
    }
}

// J_n(x) = (x/2)^n sum_k (-x^2/4)^k / (k! (n+k)!)
Long series_j(int n, Long x)
{
    Long const half = x / 2;
    Long lead = 1;
    for (int i = 1; i <= n; ++i)
    {
        lead *= half / i;
    }
    Long const q = -half * half;
    Long term = 1;
    Long sum = 1;
    for (int k = 1; k < 300; ++k)
    {
        term *= q / (Long(k) * Long(n + k));
        sum += term;
        if (k > half && std::fabs(term) <= std::numeric_limits<Long>::epsilon() * std::fabs(sum))
        {
            break;
        }
    }
    return lead * sum;
}

// Y_0(x) = (2/pi)(ln(x/2) + gamma) J_0(x)
//          + (2/pi) sum_{k>=1} (-1)^{k+1} H_k (x^2/4)^k / (k!)^2
Long series_y0(Long x)
{
    Long const q = x * x / 4;
    Long term = 1;
    Long harmonic = 0;
    Long sum = 0;
    for (int k = 1; k < 200; ++k)
    {
        term *= -q / (Long(k) * Long(k));
        harmonic += 1.0L / k;
        Long const contrib = -term * harmonic;
        sum += contrib;
        if (std::fabs(contrib) <= std::numeric_limits<Long>::epsilon() * 1e-3L)
        {
            break;
        }
    }
    return (2 / pi_l) * ((std::log(x / 2) + gamma_l) * series_j(0, x) + sum);
}

// Y_1(x) = (2/pi) ln(x/2) J_1(x) - 2/(pi x)
//          - (1/pi) sum_{k>=0} (psi(k+1) + psi(k+2)) (-1)^k (x/2)^{2k+1} / (k!(k+1)!)
Long series_y1(Long x)
{
    Long const half = x / 2;
    Long const q = -half * half;
    Long term = half;  // (x/2)^{2k+1} (-1)^k / (k!(k+1)!) at k = 0
    Long psi_k1 = -gamma_l;          // psi(1)
    Long psi_k2 = 1.0L - gamma_l;    // psi(2)
    Long sum = term * (psi_k1 + psi_k2);
    for (int k = 1; k < 200; ++k)
    {
        term *= q / (Long(k) * Long(k + 1));
        psi_k1 += 1.0L / k;
        psi_k2 += 1.0L / (k + 1);
        Long const contrib = term * (psi_k1 + psi_k2);
        sum += contrib;
        if (std::fabs(contrib) <= std::numeric_limits<Long>::epsilon() * 1e-3L)
        {
            break;
        }
    }
    return (2 / pi_l) * std::log(half) * series_j(1, x) - 2 / (pi_l * x) - sum / pi_l;
}

struct JY
{
    double j;
    double y;
};

// Hankel asymptotic expansion for nu in {0, 1}:
//   J = sqrt(2/(pi x)) (P cos chi - Q sin chi), Y = sqrt(2/(pi x)) (P sin chi + Q cos chi)
JY asymptotic_jy(int nu, double x)
{
    double const mu = 4.0 * nu * nu;
    double p = 1.0;
    double q = 0.0;
    double term = 1.0;
    double previous = std::numeric_limits<double>::infinity();
    for (int k = 1; k < 100; ++k)
    {
        double const odd = 2.0 * k - 1.0;
        term *= (mu - odd * odd) / (k * 8.0 * x);
        double const magnitude = std::fabs(term);
        if (magnitude >= previous)
        {
            break;  // asymptotic series starts to diverge
        }
        previous = magnitude;
        // k odd contributes to Q, k even to P, with alternating signs
        int const m = k / 2;
        double const sign = (m % 2 == 0) ? 1.0 : -1.0;
        if (k % 2 == 1)
        {
            q += sign * term;
        }
        else
        {
            p += sign * term;
        }
        if (magnitude < 1e-17)
        {
            break;
        }
    }
    double const chi = x - (0.5 * nu + 0.25) * std::numbers::pi;
    double const amp = std::sqrt(2.0 / (std::numbers::pi * x));
    double const c = std::cos(chi);
    double const s = std::sin(chi);
    return {amp * (p * c - q * s), amp * (p * s + q * c)};
}

JY jy0(double x)
{
    if (x <= asymptotic_crossover)
    {
        return {double(series_j(0, x)), double(series_y0(x))};
    }
    return asymptotic_jy(0, x);
}

JY jy1(double x)
{
    if (x <= asymptotic_crossover)
    {
        return {double(series_j(1, x)), double(series_y1(x))};
    }
    return asymptotic_jy(1, x);
}

// Miller's downward recurrence normalized by J_0 + 2 sum J_{2k} = 1.
double miller_j(int n, double x)
{
    int const start = 2 * ((std::max(n, int(x)) + 20 + int(std::sqrt(60.0 * std::max(n, int(x)))))
                           / 2);
    Long next = 0;     // J_{k+1}
    Long current = 1e-300L;  // J_k, arbitrary seed
    Long result = 0;
    Long norm = 0;
    Long const two_over_x = 2.0L / x;
    for (int k = start; k > 0; --k)
    {
        Long const previous = k * two_over_x * current - next;  // J_{k-1}
        next = current;
        current = previous;
        // current now holds J_{k-1}
        if (k - 1 == n)
        {
            result = current;
        }
        if ((k - 1) % 2 == 0 && k - 1 > 0)
        {
            norm += 2 * current;
        }
        if (std::fabs(current) > 1e300L)
        {
            current *= 1e-300L;
            next *= 1e-300L;
            result *= 1e-300L;
            norm *= 1e-300L;
        }
    }
    norm += current;  // J_0
    return double(result / norm);
}

double j_unchecked(int n, double x)
{
    if (n == 0)
    {
        return jy0(x).j;
    }
    if (n == 1)
    {
        return jy1(x).j;
    }
    if (x <= asymptotic_crossover)
    {
        return double(series_j(n, x));
    }
    if (n < x)
    {
        double jm = jy0(x).j;
        double jc = jy1(x).j;
        for (int k = 1; k < n; ++k)
        {
            double const jn = (2.0 * k / x) * jc - jm;
            jm = jc;
            jc = jn;
        }
        return jc;
    }
    return miller_j(n, x);
}

double y_unchecked(int n, double x)
{
    JY const a = jy0(x);
    if (n == 0)
    {
        return a.y;
    }
    JY const b = jy1(x);
    double ym = a.y;
    double yc = b.y;
    for (int k = 1; k < n; ++k)
    {
        double const yn = (2.0 * k / x) * yc - ym;
        ym = yc;
        yc = yn;
        if (!std::isfinite(yc))
        {
            throw DomainError("bessel_y: Y_" + std::to_string(n) + "(" + std::to_string(x)
                              + ") overflows double precision");
        }
    }
    return yc;
}

}  // namespace

double bessel_j(int n, double x)
{
    check_domain(n, x, "bessel_j");
    return j_unchecked(n, x);
}

double bessel_y(int n, double x)
{
    check_domain(n, x, "bessel_y");
    return y_unchecked(n, x);
}

Complex hankel1(int n, double x)
{
    check_domain(n, x, "hankel1");
    return {j_unchecked(n, x), y_unchecked(n, x)};
}

double bessel_j_prime(int n, double x)
{
    check_domain(n, x, "bessel_j_prime");
    if (n == 0)
    {
        return -j_unchecked(1, x);
    }
    return 0.5 * (j_unchecked(n - 1, x) - j_unchecked(n + 1, x));
}

double bessel_y_prime(int n, double x)
{
    check_domain(n, x, "bessel_y_prime");
    if (n == 0)
    {
        return -y_unchecked(1, x);
    }
    return 0.5 * (y_unchecked(n - 1, x) - y_unchecked(n + 1, x));
}

Complex hankel1_prime(int n, double x)
{
    check_domain(n, x, "hankel1_prime");
    if (n == 0)
    {
        return -Complex{j_unchecked(1, x), y_unchecked(1, x)};
    }
    return 0.5
           * (Complex{j_unchecked(n - 1, x), y_unchecked(n - 1, x)}
              - Complex{j_unchecked(n + 1, x), y_unchecked(n + 1, x)});
}

}  // namespace thinscat::specfun
