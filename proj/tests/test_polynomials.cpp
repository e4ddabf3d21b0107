#include <doctest.h>

#include <cmath>
#include <random>

#include "hsh/polynomials.hpp"
#include "oracles.hpp"

using namespace hsh;

namespace {

double rel_err(double a, double b)
{
    const double scale = std::max({std::abs(a), std::abs(b), 1e-300});
    return std::abs(a - b) / scale;
}

} // namespace

TEST_CASE("gegenbauer frozen values")
{
    CHECK(gegenbauer(0, 0.75, 0.3) == 1.0);
    CHECK(gegenbauer(0, 3.0, -1.0) == 1.0);
    // C^1_2(x) = 4x^2 - 1 vanishes at 1/2
    CHECK(std::abs(gegenbauer(2, 1.0, 0.5)) < 1e-15);
    // C^1_{2j}(cos w) = sin((2j+1) w)/sin w, the rank-2 group character
    const double w = 0.3;
    CHECK(rel_err(gegenbauer(2, 1.0, std::cos(w)), std::sin(3.0 * w) / std::sin(w)) < 1e-14);
}

TEST_CASE("gegenbauer matches the series definition")
{
    std::mt19937_64 rng(91);
    std::uniform_real_distribution<double> ux(-1.0, 1.0);
    std::uniform_real_distribution<double> ua(-0.4, 10.0);
    for (int trial = 0; trial < 400; ++trial) {
        const int n = trial % 16;
        const double alpha = ua(rng);
        const double x = ux(rng);
        CHECK(rel_err(gegenbauer(n, alpha, x), oracles::gegenbauer_series(n, alpha, x)) < 1e-12);
    }
}

TEST_CASE("gegenbauer domain errors")
{
    CHECK_THROWS_AS(gegenbauer(-1, 1.0, 0.0), std::domain_error);
    CHECK_THROWS_AS(gegenbauer(2, 1.0, 1.1), std::domain_error);
    CHECK(gegenbauer(2, 1.0, 1.0 + 5e-13) == doctest::Approx(3.0)); // clamped to x = 1
}

TEST_CASE("jacobi frozen values and series agreement")
{
    CHECK(jacobi(0, 0.3, -0.2, 0.7) == 1.0);
    CHECK(jacobi(1, 1.0, 0.0, 0.0) == doctest::Approx(0.5).epsilon(1e-14));

    std::mt19937_64 rng(92);
    std::uniform_real_distribution<double> ux(-1.0, 1.0);
    std::uniform_real_distribution<double> ua(-0.4, 10.0);
    for (int trial = 0; trial < 400; ++trial) {
        const int n = trial % 16;
        const double a = ua(rng), b = ua(rng), x = ux(rng);
        CHECK(rel_err(jacobi(n, a, b, x), oracles::jacobi_series(n, a, b, x)) < 1e-12);
    }
}

TEST_CASE("jacobi reflection symmetry")
{
    // P^(a,b)_n(-x) = (-1)^n P^(b,a)_n(x)
    const int n = 3;
    const double a = 1.5, b = 0.5, x = 0.4;
    CHECK(rel_err(jacobi(n, a, b, -x), -jacobi(n, b, a, x)) < 1e-14);
}

TEST_CASE("gegenbauer-jacobi bridge: ratio is independent of the argument")
{
    std::mt19937_64 rng(93);
    std::uniform_real_distribution<double> ux(-0.99, 0.99);
    for (double alpha : {0.6, 1.0, 2.5}) {
        for (int n : {1, 2, 5, 8}) {
            const double x0 = 0.123;
            const double ref = gegenbauer(n, alpha, x0) / jacobi(n, alpha - 0.5, alpha - 0.5, x0);
            for (int k = 0; k < 20; ++k) {
                const double x = ux(rng);
                const double r = gegenbauer(n, alpha, x) / jacobi(n, alpha - 0.5, alpha - 0.5, x);
                CHECK(rel_err(r, ref) < 1e-12);
            }
        }
    }
}

TEST_CASE("gegenbauer orthogonality by quadrature")
{
    // Weight (1-x^2)^{alpha-1/2} mapped to the sphere angle, where the
    // integrand is a trigonometric polynomial.
    for (double alpha : {0.5, 1.0, 1.5, 3.0}) {
        for (int m = 0; m <= 10; ++m)
            for (int n = m + 1; n <= 10; ++n) {
                const double v = oracles::gl_integrate(
                    [&](double theta) {
                        const double x = std::cos(theta);
                        return gegenbauer(m, alpha, x) * gegenbauer(n, alpha, x)
                             * std::pow(std::sin(theta), 2.0 * alpha);
                    },
                    0.0, oracles::pi, 64);
                CHECK(std::abs(v) < 1e-10);
            }
    }
}

TEST_CASE("chebyshev_t basics")
{
    CHECK(chebyshev_t(0, 0.3) == 1.0);
    CHECK(chebyshev_t(1, 0.3) == doctest::Approx(0.3));
    const double t = 1.234;
    CHECK(chebyshev_t(5, std::cos(t)) == doctest::Approx(std::cos(5 * t)).epsilon(1e-13));
}

TEST_CASE("double_factorial values and conventions")
{
    CHECK(double_factorial(-1) == 1.0);
    CHECK(double_factorial(0) == 1.0);
    CHECK(double_factorial(5) == 15.0);
    CHECK(double_factorial(8) == 384.0);
    CHECK_THROWS_AS(double_factorial(-2), std::domain_error);
    // log-space path agrees with the direct product across the switchover
    const double direct = double_factorial(149) * 151.0 * 153.0;
    CHECK(std::abs(double_factorial(153) - direct) / direct < 1e-12);
}

TEST_CASE("log_gamma values")
{
    CHECK(log_gamma(0.5) == doctest::Approx(std::log(std::sqrt(oracles::pi))).epsilon(1e-14));
    CHECK(log_gamma(2.5) == doctest::Approx(std::log(3.0 * std::sqrt(oracles::pi) / 4.0)).epsilon(1e-14));
    CHECK(log_gamma(3.0) == doctest::Approx(std::log(2.0)).epsilon(1e-14));
    CHECK_THROWS_AS(log_gamma(0.0), std::domain_error);
    CHECK_THROWS_AS(log_gamma(-1.5), std::domain_error);

    // recursion Gamma(x+1) = x Gamma(x) across the stated accuracy range
    for (double x : {0.5, 1.25, 7.0, 33.3, 180.0}) {
        const double lhs = log_gamma(x + 1.0);
        const double rhs = std::log(x) + log_gamma(x);
        CHECK(std::abs(lhs - rhs) / std::max(1.0, std::abs(lhs)) < 1e-13);
    }
}
