#include "hsh/polynomials.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace hsh {

double log_gamma(double x)
{
    if (!(x > 0.0))
        throw std::domain_error("log_gamma: argument must be positive, got " + std::to_string(x));
    return std::lgamma(x);
}

double double_factorial(int n)
{
    if (n < -1)
        throw std::domain_error("double_factorial: argument must be >= -1, got " + std::to_string(n));
    if (n <= 0)
        return 1.0; // empty product, covers (-1)!! and 0!!
    if (n <= 150) {
        double p = 1.0;
        for (int k = n; k > 1; k -= 2)
            p *= k;
        return p;
    }
    // (2k)!! = 2^k k!,  (2k+1)!! = (2k+1)! / (2^k k!)
    if (n % 2 == 0) {
        const int k = n / 2;
        return std::exp(k * std::log(2.0) + std::lgamma(k + 1.0));
    }
    const int k = (n - 1) / 2;
    return std::exp(std::lgamma(n + 2.0) - (k + 1) * std::log(2.0) - std::lgamma(k + 2.0));
}

double clamp_unit(double x)
{
    constexpr double tol = 1e-12;
    if (x > 1.0) {
        if (x > 1.0 + tol)
            throw std::domain_error("argument outside [-1, 1]: " + std::to_string(x));
        return 1.0;
    }
    if (x < -1.0) {
        if (x < -1.0 - tol)
            throw std::domain_error("argument outside [-1, 1]: " + std::to_string(x));
        return -1.0;
    }
    return x;
}

double gegenbauer(int degree, double alpha, double x)
{
    if (degree < 0)
        throw std::domain_error("gegenbauer: negative degree " + std::to_string(degree));
    x = clamp_unit(x);
    if (degree == 0)
        return 1.0;
    double ykm1 = 1.0;
    double yk = 2.0 * alpha * x;
    for (int k = 2; k <= degree; ++k) {
        const double ykp1 = (2.0 * (k + alpha - 1.0) * x * yk - (k + 2.0 * alpha - 2.0) * ykm1) / k;
        ykm1 = yk;
        yk = ykp1;
    }
    return yk;
}

double jacobi(int degree, double alpha, double beta, double x)
{
    if (degree < 0)
        throw std::domain_error("jacobi: negative degree " + std::to_string(degree));
    x = clamp_unit(x);
    if (degree == 0)
        return 1.0;
    double pkm1 = 1.0;
    double pk = 0.5 * (alpha - beta) + 0.5 * (alpha + beta + 2.0) * x;
    const double ab = alpha + beta;
    for (int k = 2; k <= degree; ++k) {
        const double c = 2.0 * k + ab;
        const double a1 = 2.0 * k * (k + ab) * (c - 2.0);
        const double a2 = (c - 1.0) * (alpha * alpha - beta * beta);
        const double a3 = (c - 2.0) * (c - 1.0) * c;
        const double a4 = 2.0 * (k + alpha - 1.0) * (k + beta - 1.0) * c;
        const double pkp1 = ((a2 + a3 * x) * pk - a4 * pkm1) / a1;
        pkm1 = pk;
        pk = pkp1;
    }
    return pk;
}

double chebyshev_t(int degree, double x)
{
    if (degree < 0)
        throw std::domain_error("chebyshev_t: negative degree " + std::to_string(degree));
    x = clamp_unit(x);
    if (degree == 0)
        return 1.0;
    double tkm1 = 1.0;
    double tk = x;
    for (int k = 2; k <= degree; ++k) {
        const double tkp1 = 2.0 * x * tk - tkm1;
        tkm1 = tk;
        tk = tkp1;
    }
    return tk;
}

} // namespace hsh
